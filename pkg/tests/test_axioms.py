import pytest

from conftest import fixture_kb
from testtdo.axioms import AXIOM_IDS, UnknownAxiomError, axiom, builtin_axioms, check_axiom
from testtdo.fol import check_well_formed
from testtdo.kb import KnowledgeBase


def test_seventeen_axioms_with_contiguous_ids():
    axioms = builtin_axioms()
    assert len(axioms) == 17
    assert tuple(a.id for a in axioms) == AXIOM_IDS == tuple(f"A{n}" for n in range(1, 18))


def test_a1_description_keeps_exclusivity_clause():
    assert "but not both at the same time" in axiom("A1").description


@pytest.mark.parametrize("bad_id", ["A18", "A0", "a1", ""])
def test_unknown_axiom_id(bad_id):
    with pytest.raises(UnknownAxiomError):
        axiom(bad_id)


def test_formulas_are_well_formed(schema):
    for axiom_def in builtin_axioms():
        check_well_formed(schema, axiom_def.formula)


def test_literal_encodings_carry_no_deviations():
    for literal_id in ("A1", "A2", "A7", "A12", "A14"):
        assert axiom(literal_id).deviations == (), literal_id


def test_a11_deviation_is_the_attribute_mapping_note():
    (note,) = axiom("A11").deviations
    assert "expected_result" in note and "value" in note


def test_quantifier_polarity_notes_on_a9_and_a13():
    for tightened in ("A9", "A13"):
        (note,) = axiom(tightened).deviations
        assert "universal" in note


def test_deviation_notes_present_where_encoding_departs():
    assert any("forward implication" in note for note in axiom("A8").deviations)
    assert any("Negation scope" in note for note in axiom("A10").deviations)
    for consequent_fixed in ("A15", "A16", "A17"):
        assert any("activity variable" in note for note in axiom(consequent_fixed).deviations)
    for tagged in ("A5", "A6"):
        assert any("classification" in note for note in axiom(tagged).deviations)


def test_check_axiom_on_motif_document(schema):
    kb = KnowledgeBase()
    for ind_id, type_name in (
        ("t", "Testing"),
        ("a1", "DesignTesting"),
        ("a2", "PerformTesting"),
        ("a3", "AnalyzeTestResults"),
    ):
        kb.add_individual(ind_id, type_name)
    for child in ("a1", "a2", "a3"):
        kb.add_link("part_of", child, "t")
    kb.finalize()
    assert check_axiom(kb, schema, "A2").value is True


def test_check_axiom_a7_witness(schema):
    kb = KnowledgeBase()
    kb.add_individual("prt", "PerformTesting")
    kb.add_individual("tr", "ActualResult")
    kb.add_link("produces", "prt", "tr")
    kb.finalize()
    result = check_axiom(kb, schema, "A7")
    assert result.value is False
    assert result.witness == {"tr": "tr", "prt": "prt"}


def test_check_axiom_unknown_id(schema):
    with pytest.raises(UnknownAxiomError):
        check_axiom(KnowledgeBase().finalize(), schema, "A99")


def test_empty_model_satisfies_every_axiom(schema):
    kb = KnowledgeBase().finalize()
    for axiom_id in AXIOM_IDS:
        assert check_axiom(kb, schema, axiom_id).value is True, axiom_id


@pytest.mark.parametrize("axiom_id", AXIOM_IDS)
def test_fixture_pair_evaluates_true_false(schema, axiom_id):
    satisfying = fixture_kb(f"{axiom_id}_satisfying.tkb")
    violating = fixture_kb(f"{axiom_id}_violating.tkb")
    assert check_axiom(satisfying, schema, axiom_id).value is True
    result = check_axiom(violating, schema, axiom_id).value
    assert result is False
