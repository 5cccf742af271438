"""First-order formulas over finite instance models, with closed-world semantics.

The formula language is deliberately small: quantifiers bind lists of
variables, connectives are n-ary where that reads better, and the atoms are
exactly what the ontology's axioms need:

* ``Is(type_name, var)``: the individual's declared type is the named term or
  a subtype of it.
* ``LinkAtom(rel, a, b)``: a link ``rel(a, b)`` is present (absent means
  false: closed world).
* ``AttrEq/AttrNeq``: exact string comparison between two attribute slots; if
  either attribute is missing, *both* atoms are false.
* ``VarNeq(a, b)``: the two variables denote distinct individuals.
* ``Tag(tag, var)``: the individual carries the named classification tag in
  its ``classification`` attribute (dynamic semantics, distinct from the
  declared type).

Quantifiers range over the whole universe (every individual in the model);
type restrictions are expressed with explicit ``Is`` guards.  The evaluator
prunes candidate lists using top-level ``Is`` conjuncts, which is sound
because a failing guard falsifies the antecedent (universals) or the body
(existentials); the brute-force evaluator used as a test oracle does no such
pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping

from .kb import KnowledgeBase
from .schema import Schema

__all__ = [
    "Formula",
    "Forall",
    "Exists",
    "And",
    "Or",
    "Not",
    "Implies",
    "Iff",
    "Is",
    "LinkAtom",
    "AttrEq",
    "AttrNeq",
    "VarNeq",
    "Tag",
    "EvalResult",
    "FormulaError",
    "CLASSIFICATION_TAGS",
    "CLASSIFICATION_ATTR",
    "check_well_formed",
    "evaluate",
    "evaluate_with_witness",
    "render",
]

# Dynamic classification markers carried by Testable Entity individuals in
# their `classification` attribute (comma separated when both apply).
CLASSIFICATION_ATTR = "classification"
CLASSIFICATION_TAGS = frozenset({"EvaluableEntity", "DevelopableEntity"})


class FormulaError(ValueError):
    """Raised for ill-formed formulas: unbound variables or unknown names."""


@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class Forall(Formula):
    vars: tuple[str, ...]
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    vars: tuple[str, ...]
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    items: tuple[Formula, ...]


@dataclass(frozen=True)
class Or(Formula):
    items: tuple[Formula, ...]


@dataclass(frozen=True)
class Not(Formula):
    item: Formula


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Iff(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Is(Formula):
    type_name: str
    var: str


@dataclass(frozen=True)
class LinkAtom(Formula):
    rel_name: str
    source: str
    target: str


@dataclass(frozen=True)
class AttrEq(Formula):
    left_var: str
    left_attr: str
    right_var: str
    right_attr: str


@dataclass(frozen=True)
class AttrNeq(Formula):
    left_var: str
    left_attr: str
    right_var: str
    right_attr: str


@dataclass(frozen=True)
class VarNeq(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Tag(Formula):
    tag_name: str
    var: str


@dataclass(frozen=True)
class EvalResult:
    """Truth value plus, when available, a witness binding.

    The witness is a falsifying binding of a top-level universal that came out
    false, or a satisfying binding of a top-level existential that came out
    true; in every other case it is None.
    """

    value: bool
    witness: dict[str, str] | None = None


def and_(*items: Formula) -> And:
    return And(tuple(items))


def or_(*items: Formula) -> Or:
    return Or(tuple(items))


def forall(vars: list[str] | tuple[str, ...], body: Formula) -> Forall:
    return Forall(tuple(vars), body)


def exists(vars: list[str] | tuple[str, ...], body: Formula) -> Exists:
    return Exists(tuple(vars), body)


# ---------------------------------------------------------------------------
# Well-formedness
# ---------------------------------------------------------------------------


def check_well_formed(schema: Schema, formula: Formula, bound: frozenset[str] = frozenset()) -> None:
    """Raise FormulaError unless every variable is bound and every name resolves.

    Relation names resolve against the declared relationships plus the untyped
    builtin relations; tag names against the classification-tag set; attribute
    names against the set of declared attribute names (ownership is dynamic:
    the variable's type is only known at evaluation time).
    """
    if isinstance(formula, (Forall, Exists)):
        if len(set(formula.vars)) != len(formula.vars):
            raise FormulaError(f"duplicate variable in quantifier: {formula.vars}")
        check_well_formed(schema, formula.body, bound | set(formula.vars))
    elif isinstance(formula, (And, Or)):
        for item in formula.items:
            check_well_formed(schema, item, bound)
    elif isinstance(formula, Not):
        check_well_formed(schema, formula.item, bound)
    elif isinstance(formula, (Implies, Iff)):
        check_well_formed(schema, formula.lhs, bound)
        check_well_formed(schema, formula.rhs, bound)
    elif isinstance(formula, Is):
        _require_bound(formula.var, bound)
        if not schema.has_term(formula.type_name):
            raise FormulaError(f"unknown type name '{formula.type_name}' in formula")
    elif isinstance(formula, LinkAtom):
        _require_bound(formula.source, bound)
        _require_bound(formula.target, bound)
        if not schema.has_relationship(formula.rel_name) and formula.rel_name not in schema.builtin_relations:
            raise FormulaError(f"unknown relationship name '{formula.rel_name}' in formula")
    elif isinstance(formula, (AttrEq, AttrNeq)):
        _require_bound(formula.left_var, bound)
        _require_bound(formula.right_var, bound)
        known = schema.attribute_names() | {CLASSIFICATION_ATTR}
        for attr in (formula.left_attr, formula.right_attr):
            if attr not in known:
                raise FormulaError(f"unknown attribute name '{attr}' in formula")
    elif isinstance(formula, VarNeq):
        _require_bound(formula.left, bound)
        _require_bound(formula.right, bound)
    elif isinstance(formula, Tag):
        _require_bound(formula.var, bound)
        if formula.tag_name not in CLASSIFICATION_TAGS:
            raise FormulaError(f"unknown classification tag '{formula.tag_name}' in formula")
    else:
        raise FormulaError(f"unknown formula node: {formula!r}")


def _require_bound(var: str, bound: frozenset[str]) -> None:
    if var not in bound:
        raise FormulaError(f"unbound variable '{var}'")


# ---------------------------------------------------------------------------
# Atom semantics (shared by the engine here and by any external evaluator)
# ---------------------------------------------------------------------------


def individual_has_tag(kb: KnowledgeBase, ind_id: str, tag_name: str) -> bool:
    raw = kb.individual(ind_id).attrs.get(CLASSIFICATION_ATTR)
    if raw is None:
        return False
    return tag_name in {token.strip() for token in raw.split(",")}


def individual_is(kb: KnowledgeBase, schema: Schema, ind_id: str, type_name: str) -> bool:
    declared = kb.individual(ind_id).type_name
    # Individuals with unregistered types satisfy no type atom; the validator
    # reports the unknown type separately.
    if not schema.has_term(declared):
        return False
    return schema.is_subtype(declared, type_name)


def _eval_atom(kb: KnowledgeBase, schema: Schema, formula: Formula, env: Mapping[str, str]) -> bool:
    if isinstance(formula, Is):
        return individual_is(kb, schema, env[formula.var], formula.type_name)
    if isinstance(formula, LinkAtom):
        return kb.has_link(formula.rel_name, env[formula.source], env[formula.target])
    if isinstance(formula, AttrEq):
        left = kb.individual(env[formula.left_var]).attrs.get(formula.left_attr)
        right = kb.individual(env[formula.right_var]).attrs.get(formula.right_attr)
        return left is not None and right is not None and left == right
    if isinstance(formula, AttrNeq):
        left = kb.individual(env[formula.left_var]).attrs.get(formula.left_attr)
        right = kb.individual(env[formula.right_var]).attrs.get(formula.right_attr)
        return left is not None and right is not None and left != right
    if isinstance(formula, VarNeq):
        return env[formula.left] != env[formula.right]
    if isinstance(formula, Tag):
        return individual_has_tag(kb, env[formula.var], formula.tag_name)
    raise FormulaError(f"not an atom: {formula!r}")


# ---------------------------------------------------------------------------
# Evaluation engine
# ---------------------------------------------------------------------------


def evaluate(kb: KnowledgeBase, schema: Schema, formula: Formula, env: Mapping[str, str] | None = None) -> bool:
    """Evaluate ``formula`` over the finite universe of ``kb``.

    ``env`` pre-binds free variables to individual ids (used for witness
    substitution checks); with no env the formula must be closed.
    """
    environment = dict(env) if env else {}
    check_well_formed(schema, formula, frozenset(environment))
    return _eval(kb, schema, formula, environment)


def evaluate_with_witness(kb: KnowledgeBase, schema: Schema, formula: Formula) -> EvalResult:
    """Like evaluate, but extracts a deterministic witness for the top quantifier.

    Among all falsifying (resp. satisfying) bindings of a top-level Forall
    (resp. Exists), the lexicographically smallest one (ordered by the
    quantifier's variable order, then by individual id) is returned.
    """
    check_well_formed(schema, formula, frozenset())
    if isinstance(formula, Forall):
        for binding in _bindings(kb, schema, formula.vars, formula.body, {}, universal=True):
            if not _eval(kb, schema, formula.body, binding):
                return EvalResult(False, {v: binding[v] for v in formula.vars})
        return EvalResult(True)
    if isinstance(formula, Exists):
        for binding in _bindings(kb, schema, formula.vars, formula.body, {}, universal=False):
            if _eval(kb, schema, formula.body, binding):
                return EvalResult(True, {v: binding[v] for v in formula.vars})
        return EvalResult(False)
    return EvalResult(_eval(kb, schema, formula, {}))


def _eval(kb: KnowledgeBase, schema: Schema, formula: Formula, env: dict[str, str]) -> bool:
    if isinstance(formula, Forall):
        return all(
            _eval(kb, schema, formula.body, binding)
            for binding in _bindings(kb, schema, formula.vars, formula.body, env, universal=True)
        )
    if isinstance(formula, Exists):
        return any(
            _eval(kb, schema, formula.body, binding)
            for binding in _bindings(kb, schema, formula.vars, formula.body, env, universal=False)
        )
    if isinstance(formula, And):
        return all(_eval(kb, schema, item, env) for item in formula.items)
    if isinstance(formula, Or):
        return any(_eval(kb, schema, item, env) for item in formula.items)
    if isinstance(formula, Not):
        return not _eval(kb, schema, formula.item, env)
    if isinstance(formula, Implies):
        return not _eval(kb, schema, formula.lhs, env) or _eval(kb, schema, formula.rhs, env)
    if isinstance(formula, Iff):
        return _eval(kb, schema, formula.lhs, env) == _eval(kb, schema, formula.rhs, env)
    return _eval_atom(kb, schema, formula, env)


def _bindings(
    kb: KnowledgeBase,
    schema: Schema,
    vars: tuple[str, ...],
    body: Formula,
    env: dict[str, str],
    universal: bool,
) -> Iterator[dict[str, str]]:
    """Assignments for ``vars`` in lexicographic (var order, id) order.

    Candidate lists are pruned by top-level Is guards: for a universal whose
    body is ``guards -> ...`` an individual outside a guard type satisfies the
    implication vacuously, and for an existential whose body conjoins the
    guards it falsifies the body, so skipped assignments can never be witnesses.
    """
    guards = _guard_types(body, universal)
    domains = []
    for var in vars:
        guard_type = guards.get(var)
        if guard_type is not None:
            domains.append(kb.instances_of(schema, guard_type, transitive=True))
        else:
            domains.append(kb.ids())
    for combo in product(*domains):
        binding = dict(env)
        binding.update(zip(vars, combo))
        yield binding


def _guard_types(body: Formula, universal: bool) -> dict[str, str]:
    if universal:
        if not isinstance(body, Implies):
            return {}
        head = body.lhs
    else:
        head = body
    if isinstance(head, Is):
        conjuncts: tuple[Formula, ...] = (head,)
    elif isinstance(head, And):
        conjuncts = head.items
    else:
        return {}
    guards: dict[str, str] = {}
    for item in conjuncts:
        if isinstance(item, Is) and item.var not in guards:
            guards[item.var] = item.type_name
    return guards


# ---------------------------------------------------------------------------
# Rendering (stable prefix notation, used by the CLI and the service)
# ---------------------------------------------------------------------------


def render(formula: Formula, indent: int = 0) -> str:
    """Deterministic prefix-notation rendering of a formula."""
    pad = "  " * indent
    if isinstance(formula, Forall):
        return f"{pad}(forall ({' '.join(formula.vars)})\n{render(formula.body, indent + 1)})"
    if isinstance(formula, Exists):
        return f"{pad}(exists ({' '.join(formula.vars)})\n{render(formula.body, indent + 1)})"
    if isinstance(formula, And):
        inner = "\n".join(render(item, indent + 1) for item in formula.items)
        return f"{pad}(and\n{inner})"
    if isinstance(formula, Or):
        inner = "\n".join(render(item, indent + 1) for item in formula.items)
        return f"{pad}(or\n{inner})"
    if isinstance(formula, Not):
        return f"{pad}(not\n{render(formula.item, indent + 1)})"
    if isinstance(formula, Implies):
        return f"{pad}(implies\n{render(formula.lhs, indent + 1)}\n{render(formula.rhs, indent + 1)})"
    if isinstance(formula, Iff):
        return f"{pad}(iff\n{render(formula.lhs, indent + 1)}\n{render(formula.rhs, indent + 1)})"
    if isinstance(formula, Is):
        return f"{pad}(is {formula.type_name} {formula.var})"
    if isinstance(formula, LinkAtom):
        return f"{pad}(link {formula.rel_name} {formula.source} {formula.target})"
    if isinstance(formula, AttrEq):
        return f"{pad}(attr-eq {formula.left_var}.{formula.left_attr} {formula.right_var}.{formula.right_attr})"
    if isinstance(formula, AttrNeq):
        return f"{pad}(attr-neq {formula.left_var}.{formula.left_attr} {formula.right_var}.{formula.right_attr})"
    if isinstance(formula, VarNeq):
        return f"{pad}(var-neq {formula.left} {formula.right})"
    if isinstance(formula, Tag):
        return f"{pad}(tag {formula.tag_name} {formula.var})"
    raise FormulaError(f"unknown formula node: {formula!r}")
