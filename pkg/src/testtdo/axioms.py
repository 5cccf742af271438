"""The 17 constraint axioms of TestTDO v1.3 as evaluable formulas.

Encoding conventions, applied uniformly:

* Universally quantified variables are guarded: the type atoms (and other
  antecedent atoms) of the published formula form the antecedent of an
  implication, so an empty model satisfies every axiom vacuously.
* Variables that occur in the antecedent are universally quantified;
  variables that occur only in the consequent are existential.  Two published
  formulas (A9, A13) quantify an antecedent variable existentially, which
  would let any individual of the wrong type satisfy the axiom vacuously and
  make it unfalsifiable in practice; those two are tightened to universal and
  the change is recorded in their deviation notes.
* Where an encoding otherwise departs from the published formula (A5/A6
  scoping and classification tags, A8 direction, A10 negation scope, A11
  attribute atoms, A15-A17 consequent variable), the axiom carries a
  deviation note rendered by ``axioms show``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fol import (
    And,
    AttrNeq,
    EvalResult,
    Exists,
    Forall,
    Iff,
    Implies,
    Is,
    LinkAtom,
    Not,
    Or,
    Tag,
    VarNeq,
    evaluate_with_witness,
)
from .kb import KnowledgeBase
from .schema import Schema, builtin_schema

__all__ = ["AxiomDef", "UnknownAxiomError", "builtin_axioms", "axiom", "check_axiom", "AXIOM_IDS"]

AXIOM_IDS = tuple(f"A{n}" for n in range(1, 18))


class UnknownAxiomError(KeyError):
    def __init__(self, axiom_id: str):
        super().__init__(axiom_id)
        self.axiom_id = axiom_id

    def __str__(self) -> str:
        return f"unknown axiom '{self.axiom_id}'"


@dataclass(frozen=True)
class AxiomDef:
    id: str
    description: str
    formula: "Forall"
    deviations: tuple[str, ...] = ()


def _link(rel: str, a: str, b: str) -> LinkAtom:
    return LinkAtom(rel, a, b)


def _axiom_list() -> tuple[AxiomDef, ...]:
    a1 = AxiomDef(
        "A1",
        "For any Perform Testing activity that produces a Test Result, this result is therefore an "
        "Actual Result or an Incident, but not both at the same time.",
        Forall(
            ("prt", "tr"),
            Implies(
                And((Is("PerformTesting", "prt"), Is("TestResult", "tr"), _link("produces", "prt", "tr"))),
                Or((Is("ActualResult", "tr"), Is("Incident", "tr"))),
            ),
        ),
        # The "not both" clause is inclusive-or in the published formula; with
        # one declared type per individual and ActualResult/Incident being
        # non-overlapping siblings, exclusivity holds by construction (the
        # validator's W-A1X scan would report it if that ever changed).
    )
    a2 = AxiomDef(
        "A2",
        "Any Testing process has at least three different activities, namely: Design Testing, Perform "
        "Testing and Analyze Test Results.",
        Forall(
            ("p",),
            Implies(
                Is("Testing", "p"),
                Exists(
                    ("a1", "a2", "a3"),
                    And(
                        (
                            Is("DesignTesting", "a1"),
                            Is("PerformTesting", "a2"),
                            Is("AnalyzeTestResults", "a3"),
                            VarNeq("a1", "a2"),
                            VarNeq("a1", "a3"),
                            VarNeq("a2", "a3"),
                            _link("part_of", "a1", "p"),
                            _link("part_of", "a2", "p"),
                            _link("part_of", "a3", "p"),
                        )
                    ),
                ),
            ),
        ),
    )
    a3 = AxiomDef(
        "A3",
        "For any Perform Functional Dynamic Testing activity that consumes a Test Specification, this "
        "specification is therefore based on a Functional Requirement.",
        Forall(
            ("pfdt", "ts"),
            Implies(
                And(
                    (
                        Is("PerformFunctionalDynamicTesting", "pfdt"),
                        Is("TestSpecification", "ts"),
                        _link("consumes", "pfdt", "ts"),
                    )
                ),
                Exists(
                    ("tb", "tdm", "fr", "dt"),
                    And(
                        (
                            Is("TestBasis", "tb"),
                            Is("TestingDesignMethod", "tdm"),
                            Is("FunctionalRequirement", "fr"),
                            Is("DesignTesting", "dt"),
                            _link("is_linked_to", "tb", "fr"),
                            _link("consumes", "dt", "tb"),
                            _link("is_assigned_to", "tdm", "dt"),
                            _link("produces", "dt", "ts"),
                        )
                    ),
                ),
            ),
        ),
    )
    a4 = AxiomDef(
        "A4",
        "For any Perform Non-Functional Dynamic Testing activity that consumes a Test Specification, "
        "this specification is therefore based on a Non-Functional Requirement.",
        Forall(
            ("pnfdt", "ts"),
            Implies(
                And(
                    (
                        Is("PerformNonFunctionalDynamicTesting", "pnfdt"),
                        Is("TestSpecification", "ts"),
                        _link("consumes", "pnfdt", "ts"),
                    )
                ),
                Exists(
                    ("tb", "tdm", "nfr", "dt"),
                    And(
                        (
                            Is("TestBasis", "tb"),
                            Is("TestingDesignMethod", "tdm"),
                            Is("NonFunctionalRequirement", "nfr"),
                            Is("DesignTesting", "dt"),
                            _link("is_linked_to", "tb", "nfr"),
                            _link("consumes", "dt", "tb"),
                            _link("is_assigned_to", "tdm", "dt"),
                            _link("produces", "dt", "ts"),
                        )
                    ),
                ),
            ),
        ),
    )
    chain_nfr = Exists(
        ("tr", "tb", "nfr"),
        And(
            (
                Is("TestRequirement", "tr"),
                Is("TestBasis", "tb"),
                Is("NonFunctionalRequirement", "nfr"),
                _link("refers_to", "tr", "te"),
                _link("is_based_on", "tr", "tb"),
                _link("is_linked_to", "tb", "nfr"),
            )
        ),
    )
    a5 = AxiomDef(
        "A5",
        "Any Testable Entity is an Evaluable Entity iff the Test Requirement that refers to this Thing "
        "is linked to a Non-Functional Requirement.",
        Forall(("te",), Implies(Is("TestableEntity", "te"), Iff(Tag("EvaluableEntity", "te"), chain_nfr))),
        (
            "Being an Evaluable Entity is read from the individual's 'classification' attribute tag, "
            "not from its declared type (each individual has exactly one declared type).",
            "The published quantifier prefix puts the existentials outside the iff; they are scoped to "
            "its right-hand side so the equivalence is judged per testable entity.",
        ),
    )
    chain_fr = Exists(
        ("tr", "tb", "fr"),
        And(
            (
                Is("TestRequirement", "tr"),
                Is("TestBasis", "tb"),
                Is("FunctionalRequirement", "fr"),
                _link("refers_to", "tr", "te"),
                _link("is_based_on", "tr", "tb"),
                _link("is_linked_to", "tb", "fr"),
            )
        ),
    )
    a6 = AxiomDef(
        "A6",
        "Any Testable Entity is a Developable Entity iff the Test Requirement that refers to this Thing "
        "is linked to a Functional Requirement.",
        Forall(("te",), Implies(Is("TestableEntity", "te"), Iff(Tag("DevelopableEntity", "te"), chain_fr))),
        (
            "Being a Developable Entity is read from the individual's 'classification' attribute tag, "
            "not from its declared type (each individual has exactly one declared type).",
            "The published quantifier prefix puts the existentials outside the iff; they are scoped to "
            "its right-hand side so the equivalence is judged per testable entity.",
        ),
    )
    a7 = AxiomDef(
        "A7",
        "Any Test Result produced by a Perform Testing activity has at least one related Test "
        "Specification which is consumed by the same Perform Testing activity.",
        Forall(
            ("tr", "prt"),
            Implies(
                And((Is("TestResult", "tr"), Is("PerformTesting", "prt"), _link("produces", "prt", "tr"))),
                Exists(("ts",), And((Is("TestSpecification", "ts"), _link("consumes", "prt", "ts")))),
            ),
        ),
    )
    a8 = AxiomDef(
        "A8",
        "All Test Project operationalizes a Test Goal and associates a Testing Strategy iff this "
        "Testing Strategy helps to achieve the operationalized Test Goal.",
        Forall(
            ("tp", "tg", "ts"),
            Implies(
                And(
                    (
                        Is("TestProject", "tp"),
                        Is("TestGoal", "tg"),
                        Is("TestingStrategy", "ts"),
                        _link("operationalizes", "tp", "tg"),
                        _link("associates", "tp", "ts"),
                    )
                ),
                _link("helps_to_achieve", "ts", "tg"),
            ),
        ),
        (
            "Encoded as the forward implication only: a literal iff over three universals would force "
            "every project to associate every strategy that helps any of its goals.",
        ),
    )
    a9 = AxiomDef(
        "A9",
        "For all Test Requirements derived from a Test Goal, there is at least one Test Project that "
        "operationalizes this Test Goal.",
        Forall(
            ("tr", "tg"),
            Implies(
                And((Is("TestRequirement", "tr"), Is("TestGoal", "tg"), _link("is_derived_in", "tg", "tr"))),
                Exists(("tp",), And((Is("TestProject", "tp"), _link("operationalizes", "tp", "tg")))),
            ),
        ),
        (
            "The published formula quantifies tg existentially; since tg occurs in the antecedent, that "
            "reading is satisfied by binding tg to any non-goal individual and can never fail. Encoded "
            "with tg universal, matching the description.",
        ),
    )
    a10 = AxiomDef(
        "A10",
        "If a Specification-based Method is assigned to a Design Testing activity that produces a Test "
        "Specification, then always consumes a Test Basis which is used by the Specification-based "
        "Method without using the internal structure of the Testable Entity.",
        Forall(
            ("dt", "spbm", "ts"),
            Implies(
                And(
                    (
                        Is("DesignTesting", "dt"),
                        Is("SpecificationBasedMethod", "spbm"),
                        Is("TestSpecification", "ts"),
                        _link("is_assigned_to", "spbm", "dt"),
                        _link("produces", "dt", "ts"),
                    )
                ),
                Exists(
                    ("tb",),
                    And(
                        (
                            Is("TestBasis", "tb"),
                            _link("consumes", "dt", "tb"),
                            Forall(
                                ("te",),
                                Implies(Is("TestableEntity", "te"), Not(_link("requires_as_input", "dt", "te"))),
                            ),
                        )
                    ),
                ),
            ),
        ),
        (
            "Negation scope: 'without using the internal structure' is encoded as a universal (the "
            "activity requires no Testable Entity as input) rather than the published existential "
            "pairing of one entity with a negated atom.",
        ),
    )
    a11 = AxiomDef(
        "A11",
        "If a Perform Testing activity consumes a Test Case in order to produce an Actual Result, and "
        "the value of the Actual Result doesn't match with the Test Case's expected result, then the "
        "Perform Testing activity produces an Incident that relies on this Actual Result.",
        Forall(
            ("prt", "tc", "ar"),
            Implies(
                And(
                    (
                        Is("PerformTesting", "prt"),
                        Is("TestCase", "tc"),
                        Is("ActualResult", "ar"),
                        _link("consumes", "prt", "tc"),
                        _link("produces", "prt", "ar"),
                        AttrNeq("tc", "expected_result", "ar", "value"),
                    )
                ),
                Exists(
                    ("i",),
                    And((Is("Incident", "i"), _link("produces", "prt", "i"), _link("relies_on", "i", "ar"))),
                ),
            ),
        ),
        (
            "The published ExpectedResult/Value part-of predicates are encoded as attribute atoms: the "
            "mismatch is AttrNeq(tc.expected_result, ar.value), false when either attribute is absent. "
            "When one Perform Testing consumes several test cases the check pairs every consumed case "
            "with every produced result, which over-approximates.",
        ),
    )
    a12 = AxiomDef(
        "A12",
        "If a Structure-based Method is assigned to a Design Testing activity that produces a Test "
        "Specification, then always requires as input the internal structure of the Testable Entity "
        "that is used by the Structure-based Method.",
        Forall(
            ("dt", "stbm", "ts"),
            Implies(
                And(
                    (
                        Is("DesignTesting", "dt"),
                        Is("StructureBasedMethod", "stbm"),
                        Is("TestSpecification", "ts"),
                        _link("is_assigned_to", "stbm", "dt"),
                        _link("produces", "dt", "ts"),
                    )
                ),
                Exists(("te",), And((Is("TestableEntity", "te"), _link("requires_as_input", "dt", "te")))),
            ),
        ),
    )
    a13 = AxiomDef(
        "A13",
        "If a Testing process requires as input a Testable Entity, then some of its Testing Activities "
        "require and use it as input as well.",
        Forall(
            ("p", "te"),
            Implies(
                And((Is("Testing", "p"), Is("TestableEntity", "te"), _link("requires_as_input", "p", "te"))),
                Exists(
                    ("ta",),
                    And(
                        (
                            Is("TestingActivity", "ta"),
                            _link("part_of", "ta", "p"),
                            _link("requires_as_input", "ta", "te"),
                        )
                    ),
                ),
            ),
        ),
        (
            "The published formula quantifies te existentially; since te occurs in the antecedent, that "
            "reading is satisfied by binding te to any individual the process does not require and can "
            "only fail in degenerate models. Encoded with te universal, matching the description (and "
            "the published A14, which is structurally identical).",
        ),
    )
    a14 = AxiomDef(
        "A14",
        "If a Testing process requires as input a Test Context Entity, then some of its Testing "
        "Activities require and use it as input as well.",
        Forall(
            ("p", "tce"),
            Implies(
                And((Is("Testing", "p"), Is("TestContextEntity", "tce"), _link("requires_as_input", "p", "tce"))),
                Exists(
                    ("ta",),
                    And(
                        (
                            Is("TestingActivity", "ta"),
                            _link("part_of", "ta", "p"),
                            _link("requires_as_input", "ta", "tce"),
                        )
                    ),
                ),
            ),
        ),
    )
    a15 = AxiomDef(
        "A15",
        "If a Testing process consumes a Test Requirement's specification, then some of its Testing "
        "Activities consume it as well.",
        Forall(
            ("p", "trs"),
            Implies(
                And((Is("Testing", "p"), Is("TestRequirementSpecification", "trs"), _link("consumes", "p", "trs"))),
                Exists(
                    ("ta",),
                    And((Is("TestingActivity", "ta"), _link("part_of", "ta", "p"), _link("consumes", "ta", "trs"))),
                ),
            ),
        ),
        (
            "The published consequent repeats consumes(p, trs); encoded with the "
            "activity variable, consumes(ta, trs), matching the description.",
            "Test Requirement specifications have no term row; they are modeled as the imported stub "
            "TestRequirementSpecification (an Artifact), linkable to its subject via the builtin "
            "'specifies' relation.",
        ),
    )
    a16 = AxiomDef(
        "A16",
        "If a Testing process consumes a Test Particular Situation's specification, then some of its "
        "Testing Activities consume it as well.",
        Forall(
            ("p", "tps"),
            Implies(
                And(
                    (
                        Is("Testing", "p"),
                        Is("TestParticularSituationSpecification", "tps"),
                        _link("consumes", "p", "tps"),
                    )
                ),
                Exists(
                    ("ta",),
                    And((Is("TestingActivity", "ta"), _link("part_of", "ta", "p"), _link("consumes", "ta", "tps"))),
                ),
            ),
        ),
        (
            "The published consequent repeats consumes(p, tps); encoded with the "
            "activity variable, consumes(ta, tps), matching the description.",
            "Test Particular Situation model specifications have no term row; they are modeled as the "
            "imported stub TestParticularSituationSpecification (an Artifact), linkable to its subject "
            "via the builtin 'specifies' relation.",
        ),
    )
    a17 = AxiomDef(
        "A17",
        "If a Testing process involves a Testing Role, then some of its Testing Activities involve it "
        "as well.",
        Forall(
            ("p", "tr"),
            Implies(
                And((Is("Testing", "p"), Is("TestingRole", "tr"), _link("involves", "p", "tr"))),
                Exists(
                    ("ta",),
                    And((Is("TestingActivity", "ta"), _link("part_of", "ta", "p"), _link("involves", "ta", "tr"))),
                ),
            ),
        ),
        (
            "The published consequent repeats involves(p, tr); encoded with the "
            "activity variable, involves(ta, tr), matching the description.",
        ),
    )
    return (a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13, a14, a15, a16, a17)


_CACHE: tuple[AxiomDef, ...] | None = None


def builtin_axioms() -> tuple[AxiomDef, ...]:
    """All 17 axioms, ids A1..A17, formulas checked against the builtin schema."""
    global _CACHE
    if _CACHE is None:
        from .fol import check_well_formed

        axioms = _axiom_list()
        schema = builtin_schema()
        assert tuple(a.id for a in axioms) == AXIOM_IDS
        for axiom_def in axioms:
            check_well_formed(schema, axiom_def.formula)
        _CACHE = axioms
    return _CACHE


def axiom(axiom_id: str) -> AxiomDef:
    for axiom_def in builtin_axioms():
        if axiom_def.id == axiom_id:
            return axiom_def
    raise UnknownAxiomError(axiom_id)


def check_axiom(kb: KnowledgeBase, schema: Schema, axiom_id: str) -> EvalResult:
    """Evaluate one axiom over the model, with witness extraction."""
    return evaluate_with_witness(kb, schema, axiom(axiom_id).formula)
