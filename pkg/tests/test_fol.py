import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import naive_eval
from randmodels import random_formula, random_kb
from testtdo import fol
from testtdo.axioms import axiom
from testtdo.kb import KnowledgeBase


def _kb(*individuals, links=(), attrs=None):
    kb = KnowledgeBase()
    attrs = attrs or {}
    for ind_id, type_name in individuals:
        kb.add_individual(ind_id, type_name, attrs.get(ind_id))
    for link in links:
        kb.add_link(*link)
    return kb.finalize()


def test_vacuous_universal_on_empty_model(schema):
    assert fol.evaluate(KnowledgeBase().finalize(), schema, axiom("A2").formula) is True


def test_a1_on_two_element_universe(schema):
    kb = _kb(("prt1", "PerformTesting"), ("tr1", "Incident"), links=[("produces", "prt1", "tr1")])
    assert fol.evaluate(kb, schema, axiom("A1").formula) is True


def test_a2_fails_on_singleton_process(schema):
    kb = _kb(("t1", "Testing"))
    assert fol.evaluate(kb, schema, axiom("A2").formula) is False


def test_witness_for_failed_universal(schema):
    kb = _kb(("t1", "Testing"))
    result = fol.evaluate_with_witness(kb, schema, axiom("A2").formula)
    assert result.value is False
    assert result.witness == {"p": "t1"}


def test_no_witness_on_vacuous_truth(schema):
    result = fol.evaluate_with_witness(KnowledgeBase().finalize(), schema, axiom("A2").formula)
    assert result.value is True
    assert result.witness is None


def test_witness_lexicographic_tie_break(schema):
    kb = _kb(("t2", "Testing"), ("t1", "Testing"))
    result = fol.evaluate_with_witness(kb, schema, axiom("A2").formula)
    assert result.witness == {"p": "t1"}


def test_witness_follows_quantifier_variable_order(schema):
    kb = _kb(("prt", "PerformTesting"), ("tr", "ActualResult"), links=[("produces", "prt", "tr")])
    result = fol.evaluate_with_witness(kb, schema, axiom("A7").formula)
    assert result.value is False
    assert list(result.witness.items()) == [("tr", "tr"), ("prt", "prt")]


def test_existential_witness_is_satisfying(schema):
    kb = _kb(("a", "TestCase"), ("b", "TestSuite"))
    formula = fol.Exists(("x",), fol.Is("TestSpecification", "x"))
    result = fol.evaluate_with_witness(kb, schema, formula)
    assert result.value is True
    assert result.witness == {"x": "a"}


def test_witness_substitution_is_sound(schema):
    for name, flavor in (("A2", "violating"), ("A7", "violating"), ("A13", "violating")):
        from conftest import fixture_kb

        kb = fixture_kb(f"{name}_{flavor}.tkb")
        formula = axiom(name).formula
        result = fol.evaluate_with_witness(kb, schema, formula)
        assert result.value is False
        assert fol.evaluate(kb, schema, formula.body, env=result.witness) is False


def test_closed_world_link_semantics(schema):
    kb = _kb(("a", "TestingStrategy"), ("g", "TestGoal"))
    present = fol.Exists(("x", "y"), fol.LinkAtom("helps_to_achieve", "x", "y"))
    assert fol.evaluate(kb, schema, present) is False


def test_attr_atoms_require_both_values(schema):
    kb = _kb(("tc", "TestCase"), ("ar", "ActualResult"), attrs={"tc": {"expected_result": "ok"}})
    eq = fol.Forall(("x", "y"), fol.AttrEq("x", "expected_result", "y", "value"))
    neq = fol.Exists(("x", "y"), fol.AttrNeq("x", "expected_result", "y", "value"))
    assert fol.evaluate(kb, schema, eq) is False
    assert fol.evaluate(kb, schema, neq) is False  # missing value: both atoms false


def test_tag_atom_reads_comma_separated_classification(schema):
    kb = _kb(("te", "TestableEntity"), attrs={"te": {"classification": "EvaluableEntity, DevelopableEntity"}})
    for tag in ("EvaluableEntity", "DevelopableEntity"):
        assert fol.evaluate(kb, schema, fol.Exists(("x",), fol.Tag(tag, "x"))) is True


def test_unknown_declared_type_satisfies_no_type_atom(schema):
    kb = _kb(("mystery", "Gizmo"))
    assert fol.evaluate(kb, schema, fol.Exists(("x",), fol.Is("TestCase", "x"))) is False


@pytest.mark.parametrize(
    "bad",
    [
        fol.Is("TestCase", "unbound"),
        fol.Forall(("x",), fol.Is("NoSuchTerm", "x")),
        fol.Forall(("x",), fol.LinkAtom("teleports", "x", "x")),
        fol.Forall(("x",), fol.AttrEq("x", "no_such_attr", "x", "value")),
        fol.Forall(("x",), fol.Tag("MysteryEntity", "x")),
        fol.Forall(("x", "x"), fol.Is("TestCase", "x")),
    ],
)
def test_ill_formed_formulas_rejected(schema, bad):
    with pytest.raises(fol.FormulaError):
        fol.evaluate(KnowledgeBase().finalize(), schema, bad)


def test_render_is_stable_prefix_notation(schema):
    rendered = fol.render(axiom("A1").formula)
    assert rendered.startswith("(forall (prt tr)")
    assert "(link produces prt tr)" in rendered
    assert rendered == fol.render(axiom("A1").formula)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), fseed=st.integers(0, 10_000))
def test_double_negation_and_de_morgan(schema, seed, fseed):
    kb = random_kb(seed, max_individuals=4, max_links=6)
    inner = random_formula(schema, fseed, max_depth=3)
    assert fol.evaluate(kb, schema, fol.Not(fol.Not(inner))) == fol.evaluate(kb, schema, inner)
    pair = (inner, random_formula(schema, fseed + 1, max_depth=3))
    lhs = fol.evaluate(kb, schema, fol.Not(fol.And(pair)))
    rhs = fol.evaluate(kb, schema, fol.Or((fol.Not(pair[0]), fol.Not(pair[1]))))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_engine_matches_oracle_on_random_models(schema, seed):
    kb = random_kb(seed)
    for n in range(1, 18):
        formula = axiom(f"A{n}").formula
        assert fol.evaluate(kb, schema, formula) == naive_eval(kb, schema, formula)


def test_guard_pruning_does_not_change_semantics(schema):
    # A formula whose guard excludes every individual: engine prunes, oracle loops.
    kb = _kb(("a", "TestCase"), ("b", "TestCase"))
    formula = fol.Forall(("x",), fol.Implies(fol.Is("Testing", "x"), fol.LinkAtom("part_of", "x", "x")))
    assert fol.evaluate(kb, schema, formula) is naive_eval(kb, schema, formula) is True
