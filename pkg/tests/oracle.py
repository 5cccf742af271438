"""Brute-force reference evaluator used to cross-check the formula engine.

Written against the formula AST and the *raw* schema/model data only: it walks
taxonomy edges itself instead of calling the schema's subtype query, iterates
every individual for every quantified variable instead of pruning by type
guards, and re-states the atom semantics from scratch.  Keep it dumb: its
value is that it shares no evaluation code with the engine it checks.
"""

from __future__ import annotations

from itertools import product

from testtdo import fol
from testtdo.kb import KnowledgeBase
from testtdo.schema import Schema


def _reachable_parents(schema: Schema, term: str) -> set[str]:
    seen = {term}
    frontier = [term]
    while frontier:
        current = frontier.pop()
        for edge in schema.taxonomy:
            if edge.child == current and edge.parent not in seen:
                seen.add(edge.parent)
                frontier.append(edge.parent)
    return seen


def naive_eval(kb: KnowledgeBase, schema: Schema, formula: fol.Formula, env: dict[str, str] | None = None) -> bool:
    env = dict(env or {})
    universe = sorted(ind.id for ind in kb.individuals())

    if isinstance(formula, fol.Forall):
        for combo in product(universe, repeat=len(formula.vars)):
            inner = dict(env)
            inner.update(zip(formula.vars, combo))
            if not naive_eval(kb, schema, formula.body, inner):
                return False
        return True
    if isinstance(formula, fol.Exists):
        for combo in product(universe, repeat=len(formula.vars)):
            inner = dict(env)
            inner.update(zip(formula.vars, combo))
            if naive_eval(kb, schema, formula.body, inner):
                return True
        return False
    if isinstance(formula, fol.And):
        return all(naive_eval(kb, schema, item, env) for item in formula.items)
    if isinstance(formula, fol.Or):
        return any(naive_eval(kb, schema, item, env) for item in formula.items)
    if isinstance(formula, fol.Not):
        return not naive_eval(kb, schema, formula.item, env)
    if isinstance(formula, fol.Implies):
        return (not naive_eval(kb, schema, formula.lhs, env)) or naive_eval(kb, schema, formula.rhs, env)
    if isinstance(formula, fol.Iff):
        return naive_eval(kb, schema, formula.lhs, env) == naive_eval(kb, schema, formula.rhs, env)

    if isinstance(formula, fol.Is):
        declared = kb.individual(env[formula.var]).type_name
        if not schema.has_term(declared):
            return False
        return formula.type_name in _reachable_parents(schema, declared)
    if isinstance(formula, fol.LinkAtom):
        return any(
            link.rel_name == formula.rel_name
            and link.source == env[formula.source]
            and link.target == env[formula.target]
            for link in kb.links()
        )
    if isinstance(formula, fol.AttrEq):
        left = kb.individual(env[formula.left_var]).attrs.get(formula.left_attr)
        right = kb.individual(env[formula.right_var]).attrs.get(formula.right_attr)
        if left is None or right is None:
            return False
        return left == right
    if isinstance(formula, fol.AttrNeq):
        left = kb.individual(env[formula.left_var]).attrs.get(formula.left_attr)
        right = kb.individual(env[formula.right_var]).attrs.get(formula.right_attr)
        if left is None or right is None:
            return False
        return left != right
    if isinstance(formula, fol.VarNeq):
        return env[formula.left] != env[formula.right]
    if isinstance(formula, fol.Tag):
        raw = kb.individual(env[formula.var]).attrs.get("classification")
        if raw is None:
            return False
        return formula.tag_name in [token.strip() for token in raw.split(",")]
    raise AssertionError(f"unhandled node {formula!r}")
