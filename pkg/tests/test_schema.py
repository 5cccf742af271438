import dataclasses

import pytest

from testtdo.schema import (
    AttributeDef,
    Schema,
    TaxonomyEdge,
    TermDef,
    UnknownTermError,
    builtin_schema,
)


def test_counts_match_published_footers(schema):
    counts = schema.counts()
    assert counts.own == 44
    assert counts.reused == 4
    assert counts.attributes == 51
    assert counts.relationships == 43


def test_builtin_schema_is_cached_singleton(schema):
    assert builtin_schema() is schema


def test_term_lookup_and_synonyms(schema):
    assert schema.term("TestSuite").synonyms == ("Test Set",)
    assert schema.term("Incident").synonyms == ("Anomaly", "Defect", "Issue Report")
    assert schema.term("TestCase").display_name == "Test Case"
    with pytest.raises(UnknownTermError):
        schema.term("NoSuchTerm")


def test_reused_and_stub_terms_have_foreign_provenance(schema):
    for term in schema.terms.values():
        if term.kind in ("reused", "imported_stub"):
            assert term.provenance != "TestTDO", term.canonical_name
        else:
            assert term.provenance == "TestTDO", term.canonical_name


@pytest.mark.parametrize(
    "child,ancestor,expected",
    [
        ("ActualResult", "TestResult", True),
        ("PerformFunctionalDynamicTesting", "PerformTesting", True),
        ("TestResult", "TestResult", True),
        ("TestResult", "TestCase", False),
        ("TestItem", "TestableEntity", True),
        ("Incident", "Artifact", True),
        ("Incident", "WorkProduct", True),
        ("TestCase", "TestSpecification", True),
        ("TestSpecification", "TestCase", False),
    ],
)
def test_is_subtype(schema, child, ancestor, expected):
    assert schema.is_subtype(child, ancestor) is expected


def test_is_subtype_rejects_unknown_names(schema):
    with pytest.raises(UnknownTermError):
        schema.is_subtype("Ghost", "TestResult")
    with pytest.raises(UnknownTermError):
        schema.is_subtype("TestResult", "Ghost")


def test_subtyping_is_a_partial_order(schema):
    names = schema.term_names()
    for name in names:
        assert schema.is_subtype(name, name)
    for a in names:
        for b in schema.ancestors(a):
            if a != b:
                assert not schema.is_subtype(b, a), f"antisymmetry broken: {a} <-> {b}"
            # transitivity: ancestors of an ancestor are ancestors
            assert schema.ancestors(b) <= schema.ancestors(a) | {a}


def test_no_term_is_its_own_proper_ancestor(schema):
    for name in schema.term_names():
        for parent in schema.parents(name):
            assert not schema.is_subtype(parent, name)


def test_attributes_of_own(schema):
    names = {a.attr_name for a in schema.attributes_of("TestCase")}
    assert names == {"precondition", "input", "expected_result", "postcondition"}


def test_attributes_of_inherited(schema):
    names = {a.attr_name for a in schema.attributes_of("TestCase", inherited=True)}
    assert names == {"precondition", "input", "expected_result", "postcondition", "name", "version"}
    assert schema.attributes_of("TestingLifeCycle", inherited=True) == ()
    with pytest.raises(UnknownTermError):
        schema.attributes_of("Nope")


def test_inherited_attributes_keep_most_derived_definition():
    terms = {
        "Base": TermDef("Base", "Base", (), "", "ProcCO", "imported_stub"),
        "Derived": TermDef("Derived", "Derived", (), "", "ProcCO", "imported_stub"),
    }
    synthetic = Schema(
        terms=terms,
        taxonomy=frozenset({TaxonomyEdge("Derived", "Base")}),
        attributes=(
            AttributeDef("Base", "name", "base definition"),
            AttributeDef("Derived", "name", "derived definition"),
        ),
        relationships=(),
        builtin_relations=frozenset(),
        axiom_link_extensions=frozenset(),
    )
    (row,) = synthetic.attributes_of("Derived", inherited=True)
    assert row.definition == "derived definition"


def test_item_description_row_has_empty_definition(schema):
    (row,) = [a for a in schema.attributes if a.owner == "TestChecklist"]
    assert row.attr_name == "item_description"
    assert row.definition == ""


def test_relationship_defs_overloads(schema):
    assert len(schema.relationship_defs("consumes")) == 6
    assert len(schema.relationship_defs("produces")) == 5
    assert len(schema.relationship_defs("is_assigned_to")) == 4
    assert len(schema.relationship_defs("*")) == 43
    assert schema.relationship_defs("teleports") == ()


def test_registry_is_closed(schema):
    for row in schema.relationship_defs("*"):
        assert schema.has_term(row.source)
        assert schema.has_term(row.target)
    for attr in schema.attributes:
        assert schema.has_term(attr.owner)
    for edge in schema.taxonomy:
        assert schema.has_term(edge.child)
        assert schema.has_term(edge.parent)


def test_inverse_bounds_only_on_in_turn_rows(schema):
    inverse = {row.rel_name for row in schema.relationship_defs("*") if row.inverse_checked}
    assert inverse == {"involves", "plays", "verifies_validates"}


def test_term_defs_are_immutable(schema):
    with pytest.raises(dataclasses.FrozenInstanceError):
        schema.term("TestCase").definition = "other"


def test_builtin_relations_and_extensions(schema):
    assert schema.builtin_relations == {"part_of", "specifies"}
    assert ("involves", "TestingActivity", "TestingRole") in schema.axiom_link_extensions
    assert schema.link_signature_accepted("involves", "DesignTesting", "TestingRole")
    assert not schema.link_signature_accepted("involves", "TestPlan", "TestingRole")
    # Overloads: accepted if any row fits the endpoints.
    assert schema.link_signature_accepted("consumes", "AnalyzeTestResults", "ActualResult")
    assert not schema.link_signature_accepted("consumes", "TestPlan", "ActualResult")
