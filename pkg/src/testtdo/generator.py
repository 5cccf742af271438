"""Seeded generation of conforming models, and targeted fault injection.

Blind random sampling essentially never satisfies the axiom system, so
generation is motif-based: a fixed minimal model (one fully-linked test
project with its process, the three mandated activities, and every lower
bound closed) is instantiated first, then grown with self-contained units.
Each unit is constructed to keep the model conforming, so the final validator
pass is a verification step, not a repair loop.

Randomness comes from ``random.Random(seed)``, i.e. the MT19937 Mersenne
Twister as specified in CPython's random module, seeded directly with the
given integer; output is a pure function of the configuration.

``perturb`` injects one targeted defect family (a missing lower bound, an
exceeded upper bound, or a named axiom violation) into a conforming model by
trying minimal edits (single link removal or addition, a retype, or one
attribute change) and confirming the outcome with the validator itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .axioms import AXIOM_IDS
from .kb import KnowledgeBase
from .schema import Schema, builtin_schema
from .validator import validate

__all__ = [
    "GenConfig",
    "PERTURB_KINDS",
    "PerturbNotApplicableError",
    "generate_conforming",
    "minimal_motif",
    "perturb",
]

MAX_SIZE = 10_000
PERTURB_KINDS = ("cardinality_lower", "cardinality_upper") + AXIOM_IDS

# The motif (21 individuals) is used whenever the requested size can absorb
# it within the +/-20% tolerance; below that, only free-standing units are
# composed.
_MOTIF_SIZE = 21
_MOTIF_THRESHOLD = 18


@dataclass(frozen=True)
class GenConfig:
    seed: int
    size: int
    mode: str = "conforming"

    def __post_init__(self) -> None:
        if self.mode != "conforming":
            raise ValueError(f"unknown generation mode '{self.mode}'")
        if not 0 <= self.size <= MAX_SIZE:
            raise ValueError(f"size must be in 0..{MAX_SIZE}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


class PerturbNotApplicableError(ValueError):
    def __init__(self, kind: str, reason: str):
        super().__init__(f"cannot inject '{kind}': {reason}")
        self.kind = kind


def minimal_motif() -> KnowledgeBase:
    """The fixed minimal model passing complete-mode validation.

    One test project operationalizing one goal, managed and planned, with a
    testing process containing the three mandated activities and enough
    linked specifications/results/participants to close every lower bound
    and satisfy every axiom.
    """
    kb = KnowledgeBase()
    for ind_id, type_name in (
        ("project", "TestProject"),
        ("goal", "TestGoal"),
        ("strategy", "TestingStrategy"),
        ("management", "TestingManagement"),
        ("lifecycle", "TestingLifeCycle"),
        ("process", "Testing"),
        ("design", "DesignTesting"),
        ("perform", "PerformTesting"),
        ("analyze", "AnalyzeTestResults"),
        ("procedure", "RealizationProcedure"),
        ("report", "TestConclusionReport"),
        ("plan", "TestPlan"),
        ("info_need", "TestInformationNeed"),
        ("requirement", "TestRequirement"),
        ("entity", "TestableEntity"),
        ("context", "TestContextEntity"),
        ("situation", "TestParticularSituation"),
        ("role", "TestingRole"),
        ("agent", "TestingAgent"),
    ):
        kb.add_individual(ind_id, type_name)
    kb.add_individual("testcase", "TestCase", {"expected_result": "ok"})
    kb.add_individual("result", "ActualResult", {"value": "ok"})
    for link in (
        ("operationalizes", "project", "goal"),
        ("associates", "project", "strategy"),
        ("defines", "project", "situation"),
        ("is_managed_by", "project", "management"),
        ("helps_to_achieve", "strategy", "goal"),
        ("implies", "goal", "situation"),
        ("is_derived_in", "goal", "requirement"),
        ("is_supported_by", "goal", "info_need"),
        ("adopts", "management", "lifecycle"),
        ("produces", "management", "plan"),
        ("uses", "lifecycle", "strategy"),
        ("involves", "process", "role"),
        ("requires_as_input", "process", "entity"),
        ("part_of", "design", "process"),
        ("part_of", "perform", "process"),
        ("part_of", "analyze", "process"),
        ("produces", "design", "procedure"),
        ("produces", "design", "testcase"),
        ("consumes", "perform", "testcase"),
        ("produces", "perform", "result"),
        ("consumes", "analyze", "result"),
        ("consumes", "analyze", "testcase"),
        ("produces", "analyze", "report"),
        ("takes_into_account", "analyze", "info_need"),
        ("refers_to", "requirement", "entity"),
        ("surrounded_by", "entity", "context"),
        ("influences", "context", "entity"),
        ("deals_with_test_target", "situation", "entity"),
        ("verifies_validates", "testcase", "entity"),
        ("plays", "agent", "role"),
        ("is_assigned_to", "agent", "design"),
        # Activity-level closures mandated by A17 and A13.
        ("involves", "design", "role"),
        ("requires_as_input", "perform", "entity"),
    ):
        kb.add_link(*link)
    return kb


# ---------------------------------------------------------------------------
# Growth units.  Each returns the number of individuals it added and must
# leave the model conforming (verified wholesale by the final validate pass).
# ---------------------------------------------------------------------------

_SOLO_TYPES = (
    "RealizationProcedure",
    "TestConclusionReport",
    "TestPlan",
    "TestInformationNeed",
    "ActualResult",
    "Incident",
    "TestBasis",
    "Artifact",
    "FunctionalRequirement",
    "NonFunctionalRequirement",
)


class _Grower:
    def __init__(self, kb: KnowledgeBase, rng: random.Random, with_motif: bool):
        self.kb = kb
        self.rng = rng
        self.with_motif = with_motif
        self.counter = 0

    def fresh(self, prefix: str) -> str:
        self.counter += 1
        return f"{prefix}{self.counter}"

    # -- free-standing units -------------------------------------------------

    def unit_solo(self) -> int:
        self.kb.add_individual(self.fresh("x"), self.rng.choice(_SOLO_TYPES))
        return 1

    def unit_triangle(self) -> int:
        tc, te, tce = self.fresh("tc"), self.fresh("te"), self.fresh("tce")
        self.kb.add_individual(tc, "TestCase")
        self.kb.add_individual(te, "TestableEntity")
        self.kb.add_individual(tce, "TestContextEntity")
        self.kb.add_link("verifies_validates", tc, te)
        self.kb.add_link("surrounded_by", te, tce)
        self.kb.add_link("influences", tce, te)
        return 3

    def unit_classified_chain(self) -> int:
        """A tagged testable entity with the requirement/basis chain that
        justifies its classification (axioms A5/A6)."""
        tags = self.rng.choice((("EvaluableEntity",), ("DevelopableEntity",), ("EvaluableEntity", "DevelopableEntity")))
        te, tr, tb, tce, tc = (self.fresh(p) for p in ("te", "tr", "tb", "tce", "tc"))
        self.kb.add_individual(te, "TestableEntity", {"classification": ", ".join(tags)})
        self.kb.add_individual(tr, "TestRequirement")
        self.kb.add_individual(tb, "TestBasis")
        self.kb.add_individual(tce, "TestContextEntity")
        self.kb.add_individual(tc, "TestChecklist")
        self.kb.add_link("refers_to", tr, te)
        self.kb.add_link("is_based_on", tr, tb)
        self.kb.add_link("surrounded_by", te, tce)
        self.kb.add_link("influences", tce, te)
        self.kb.add_link("verifies_validates", tc, te)
        added = 5
        if "EvaluableEntity" in tags:
            nfr = self.fresh("nfr")
            self.kb.add_individual(nfr, "NonFunctionalRequirement")
            self.kb.add_link("is_linked_to", tb, nfr)
            added += 1
        if "DevelopableEntity" in tags:
            fr = self.fresh("fr")
            self.kb.add_individual(fr, "FunctionalRequirement")
            self.kb.add_link("is_linked_to", tb, fr)
            added += 1
        return added

    # -- units growing the motif cluster --------------------------------------

    def unit_testcase(self) -> int:
        tc = self.fresh("tc")
        attrs = {"expected_result": "ok"} if self.rng.random() < 0.5 else {}
        self.kb.add_individual(tc, "TestCase", attrs)
        self.kb.add_link("verifies_validates", tc, "entity")
        self.kb.add_link("consumes", "perform", tc)
        return 1

    def unit_role(self) -> int:
        role = self.fresh("role")
        self.kb.add_individual(role, "TestingRole")
        self.kb.add_link("involves", "process", role)
        self.kb.add_link("involves", "design", role)
        self.kb.add_link("plays", "agent", role)
        return 1

    def unit_agent(self) -> int:
        agent = self.fresh("agent")
        self.kb.add_individual(agent, "TestingAgent")
        self.kb.add_link("plays", agent, "role")
        self.kb.add_link("is_assigned_to", agent, self.rng.choice(("design", "perform", "analyze")))
        return 1

    def unit_strategy(self) -> int:
        strategy = self.fresh("s")
        self.kb.add_individual(strategy, "TestingStrategy")
        self.kb.add_link("helps_to_achieve", strategy, "goal")
        return 1

    def unit_goal(self) -> int:
        goal, req = self.fresh("g"), self.fresh("req")
        self.kb.add_individual(goal, "TestGoal")
        self.kb.add_individual(req, "TestRequirement")
        self.kb.add_link("implies", goal, "situation")
        self.kb.add_link("is_supported_by", goal, "info_need")
        self.kb.add_link("is_derived_in", goal, req)
        self.kb.add_link("refers_to", req, "entity")
        self.kb.add_link("operationalizes", "project", goal)
        # A8: the project associates the motif strategy, so it must help.
        self.kb.add_link("helps_to_achieve", "strategy", goal)
        return 2

    def unit_situation(self) -> int:
        tps = self.fresh("tps")
        self.kb.add_individual(tps, "TestParticularSituation")
        self.kb.add_link("deals_with_test_target", tps, "entity")
        if self.rng.random() < 0.5:
            self.kb.add_link("deals_with_test_environment", tps, "context")
        return 1

    def unit_context(self) -> int:
        tce = self.fresh("tce")
        self.kb.add_individual(tce, "TestContextEntity")
        self.kb.add_link("influences", tce, "entity")
        return 1

    def unit_entity(self) -> int:
        te = self.fresh("te")
        self.kb.add_individual(te, "TestableEntity")
        self.kb.add_link("surrounded_by", te, "context")
        self.kb.add_link("verifies_validates", "testcase", te)
        return 1

    def unit_design_method(self) -> int:
        tdm = self.fresh("tdm")
        self.kb.add_individual(tdm, "TestingDesignMethod")
        self.kb.add_link("is_assigned_to", tdm, "design")
        return 1

    def unit_spec_based_method(self) -> int:
        """Specification-based method on the motif design activity; A10 needs
        the activity to consume a basis and require no entity as input."""
        spbm, tb = self.fresh("spbm"), self.fresh("tb")
        self.kb.add_individual(spbm, "SpecificationBasedMethod")
        self.kb.add_individual(tb, "TestBasis")
        self.kb.add_link("is_assigned_to", spbm, "design")
        self.kb.add_link("consumes", "design", tb)
        return 2

    def unit_structure_based_method(self) -> int:
        """Structure-based method on its own design activity (A12 requires the
        entity as input, which would contradict A10 on the shared one)."""
        dt, stbm, proc, tc = (self.fresh(p) for p in ("dt", "stbm", "proc", "tc"))
        self.kb.add_individual(dt, "DesignTesting")
        self.kb.add_individual(stbm, "StructureBasedMethod")
        self.kb.add_individual(proc, "RealizationProcedure")
        self.kb.add_individual(tc, "TestCase")
        self.kb.add_link("is_assigned_to", stbm, dt)
        self.kb.add_link("produces", dt, proc)
        self.kb.add_link("produces", dt, tc)
        self.kb.add_link("requires_as_input", dt, "entity")
        self.kb.add_link("verifies_validates", tc, "entity")
        return 4

    def unit_requirement_spec(self) -> int:
        trs = self.fresh("trs")
        self.kb.add_individual(trs, "TestRequirementSpecification")
        self.kb.add_link("consumes", "process", trs)
        self.kb.add_link("consumes", "design", trs)  # A15 closure
        self.kb.add_link("specifies", trs, "requirement")
        return 1

    def unit_situation_spec(self) -> int:
        tpss = self.fresh("tpss")
        self.kb.add_individual(tpss, "TestParticularSituationSpecification")
        self.kb.add_link("consumes", "process", tpss)
        self.kb.add_link("consumes", "analyze", tpss)  # A16 closure
        self.kb.add_link("specifies", tpss, "situation")
        return 1

    def _dynamic_testing(self, activity_type: str, req_type: str) -> int:
        """A functional/non-functional dynamic testing activity with the full
        design chain A3/A4 demand for its consumed specification."""
        act, ar, tc, tb, tdm, req = (self.fresh(p) for p in ("pdt", "ar", "tc", "tb", "tdm", "req"))
        self.kb.add_individual(act, activity_type)
        self.kb.add_individual(ar, "ActualResult")
        self.kb.add_individual(tc, "TestCase")
        self.kb.add_individual(tb, "TestBasis")
        self.kb.add_individual(tdm, "TestingDesignMethod")
        self.kb.add_individual(req, req_type)
        self.kb.add_link("consumes", act, tc)
        self.kb.add_link("produces", act, ar)
        self.kb.add_link("produces", "design", tc)
        self.kb.add_link("consumes", "design", tb)
        self.kb.add_link("is_assigned_to", tdm, "design")
        self.kb.add_link("is_linked_to", tb, req)
        self.kb.add_link("verifies_validates", tc, "entity")
        return 6

    def unit_functional_dynamic(self) -> int:
        return self._dynamic_testing("PerformFunctionalDynamicTesting", "FunctionalRequirement")

    def unit_nonfunctional_dynamic(self) -> int:
        return self._dynamic_testing("PerformNonFunctionalDynamicTesting", "NonFunctionalRequirement")

    # -- unit catalog ----------------------------------------------------------

    def catalog(self) -> list[tuple[int, Callable[[], int]]]:
        units: list[tuple[int, Callable[[], int]]] = [
            (1, self.unit_solo),
            (3, self.unit_triangle),
            (7, self.unit_classified_chain),
        ]
        if self.with_motif:
            units += [
                (1, self.unit_testcase),
                (1, self.unit_role),
                (1, self.unit_agent),
                (1, self.unit_strategy),
                (2, self.unit_goal),
                (1, self.unit_situation),
                (1, self.unit_context),
                (1, self.unit_entity),
                (1, self.unit_design_method),
                (2, self.unit_spec_based_method),
                (4, self.unit_structure_based_method),
                (1, self.unit_requirement_spec),
                (1, self.unit_situation_spec),
                (6, self.unit_functional_dynamic),
                (6, self.unit_nonfunctional_dynamic),
            ]
        return units


def generate_conforming(config: GenConfig) -> KnowledgeBase:
    """Deterministically build a model that passes complete-mode validation.

    The result holds exactly ``config.size`` individuals whenever the target
    is not below the fixed motif (21 individuals, returned as-is for size 0);
    in the awkward band just under the motif it may overshoot within the
    documented 20% tolerance.
    """
    schema = builtin_schema()
    rng = random.Random(config.seed)
    with_motif = config.size == 0 or config.size >= _MOTIF_THRESHOLD
    kb = minimal_motif() if with_motif else KnowledgeBase()

    remaining = 0 if config.size == 0 else config.size - (_MOTIF_SIZE if with_motif else 0)
    grower = _Grower(kb, rng, with_motif)
    while remaining > 0:
        candidates = [(size, unit) for size, unit in grower.catalog() if size <= remaining]
        if not candidates:
            break
        _, unit = rng.choice(candidates)
        remaining -= unit()

    kb.finalize()
    report = validate(kb, schema, "complete")
    if report.errors:
        raise AssertionError(f"generator produced a non-conforming model: {report.codes()}")
    return kb


# ---------------------------------------------------------------------------
# Perturbation
# ---------------------------------------------------------------------------


def perturb(kb: KnowledgeBase, seed: int, kind: str) -> KnowledgeBase:
    """Inject one defect of the targeted family into a conforming model.

    Tries minimal candidate edits in seed-shuffled order, keeping the first
    whose validator report contains the targeted diagnostic (and, for axiom
    kinds, no other axiom diagnostic).  Raises PerturbNotApplicableError when
    the model offers no way to inject the kind with a single edit.
    """
    if kind not in PERTURB_KINDS:
        raise ValueError(f"unknown perturbation kind '{kind}' (expected one of {PERTURB_KINDS})")
    schema = builtin_schema()
    rng = random.Random(seed)
    candidates = _candidate_edits(kb, schema, kind)
    rng.shuffle(candidates)
    for edit in candidates:
        mutated = kb.copy()
        try:
            edit(mutated)
            mutated.finalize()
        except ValueError:
            continue  # e.g. a synthetic id colliding with an existing one
        report = validate(mutated, schema, "complete")
        codes = set(report.codes())
        if kind == "cardinality_lower":
            ok = "E020" in codes
        elif kind == "cardinality_upper":
            ok = "E021" in codes
        else:
            axiom_codes = {c for c in codes if c.startswith("AX-")}
            ok = axiom_codes == {f"AX-{kind}"}
        if ok:
            return mutated
    raise PerturbNotApplicableError(kind, "no single edit on this model injects the targeted diagnostic")


def _remove(link: tuple[str, str, str]):
    return lambda kb: kb.remove_link(*link)


def _add(link: tuple[str, str, str]):
    return lambda kb: kb.add_link(*link)


def _retype(ind_id: str, type_name: str):
    return lambda kb: kb.set_type(ind_id, type_name)


def _set_attr(ind_id: str, attr: str, value: str | None):
    return lambda kb: kb.set_attr(ind_id, attr, value)


def _candidate_edits(kb: KnowledgeBase, schema: Schema, kind: str) -> list:
    is_a = lambda ind_id, type_name: (
        schema.has_term(kb.individual(ind_id).type_name)
        and schema.is_subtype(kb.individual(ind_id).type_name, type_name)
    )
    links = kb.links()
    out: list = []

    if kind == "cardinality_lower":
        # Removing any declared-relationship link may open a lower bound; the
        # validator pass keeps only removals that actually do.
        out += [_remove(l) for l in links if schema.has_relationship(l.rel_name)]
    elif kind == "cardinality_upper":
        # Add a fresh conforming target to a source already at an exact bound.
        counter = 0
        for row in schema.relationship_defs("*"):
            if row.target_max is None:
                continue
            target_type = "ActualResult" if row.target == "TestResult" else row.target
            for ind in kb.individuals():
                if is_a(ind.id, row.source):
                    counter += 1
                    fresh = f"extra{counter}"

                    def edit(mutated, source=ind.id, rel=row.rel_name, new_id=fresh, new_type=target_type):
                        mutated.add_individual(new_id, new_type)
                        mutated.add_link(rel, source, new_id)

                    out.append(edit)
    elif kind == "A1":
        out += [
            _retype(l.target, "TestResult")
            for l in links
            if l.rel_name == "produces" and is_a(l.source, "PerformTesting") and is_a(l.target, "TestResult")
        ]
    elif kind == "A2":
        out += [_remove(l) for l in links if l.rel_name == "part_of" and is_a(l.target, "Testing")]
    elif kind in ("A3", "A4"):
        activity = "PerformFunctionalDynamicTesting" if kind == "A3" else "PerformNonFunctionalDynamicTesting"
        req = "FunctionalRequirement" if kind == "A3" else "NonFunctionalRequirement"
        out += [
            _retype(l.source, activity)
            for l in links
            if l.rel_name == "consumes"
            and kb.individual(l.source).type_name == "PerformTesting"
            and is_a(l.target, "TestSpecification")
        ]
        out += [_remove(l) for l in links if l.rel_name == "is_linked_to" and is_a(l.target, req)]
    elif kind in ("A5", "A6"):
        tag = "EvaluableEntity" if kind == "A5" else "DevelopableEntity"
        for ind in kb.individuals():
            if not is_a(ind.id, "TestableEntity"):
                continue
            tags = {t.strip() for t in ind.attrs.get("classification", "").split(",") if t.strip()}
            if tag in tags:
                remaining = ", ".join(sorted(tags - {tag}))
                out.append(_set_attr(ind.id, "classification", remaining or None))
            else:
                out.append(_set_attr(ind.id, "classification", ", ".join(sorted(tags | {tag}))))
    elif kind == "A7":
        out += [
            _remove(l)
            for l in links
            if l.rel_name == "consumes" and is_a(l.source, "PerformTesting") and is_a(l.target, "TestSpecification")
        ]
    elif kind == "A8":
        out += [_remove(l) for l in links if l.rel_name == "helps_to_achieve"]
    elif kind == "A9":
        out += [_remove(l) for l in links if l.rel_name == "operationalizes"]
    elif kind == "A10":
        design_ids = [ind.id for ind in kb.individuals() if is_a(ind.id, "DesignTesting")]
        out += [
            _remove(l)
            for l in links
            if l.rel_name == "consumes" and l.source in design_ids and is_a(l.target, "TestBasis")
        ]
        entities = [ind.id for ind in kb.individuals() if is_a(ind.id, "TestableEntity")]
        out += [_add(("requires_as_input", dt, te)) for dt in design_ids for te in entities]
    elif kind == "A11":
        for consume in links:
            if consume.rel_name != "consumes" or not is_a(consume.target, "TestCase"):
                continue
            expected = kb.individual(consume.target).attrs.get("expected_result")
            if expected is None:
                continue
            for produce in links:
                if (
                    produce.rel_name == "produces"
                    and produce.source == consume.source
                    and is_a(produce.target, "ActualResult")
                ):
                    out.append(_set_attr(produce.target, "value", expected + "-mismatch"))
    elif kind == "A12":
        out += [
            _remove(l)
            for l in links
            if l.rel_name == "requires_as_input" and is_a(l.source, "DesignTesting") and is_a(l.target, "TestableEntity")
        ]
    elif kind == "A13":
        out += [
            _remove(l)
            for l in links
            if l.rel_name == "requires_as_input"
            and is_a(l.source, "TestingActivity")
            and is_a(l.target, "TestableEntity")
        ]
    elif kind == "A14":
        processes = [ind.id for ind in kb.individuals() if is_a(ind.id, "Testing")]
        contexts = [ind.id for ind in kb.individuals() if is_a(ind.id, "TestContextEntity")]
        out += [_add(("requires_as_input", p, tce)) for p in processes for tce in contexts]
    elif kind in ("A15", "A16"):
        spec_type = "TestRequirementSpecification" if kind == "A15" else "TestParticularSituationSpecification"
        out += [
            _remove(l)
            for l in links
            if l.rel_name == "consumes" and is_a(l.source, "TestingActivity") and is_a(l.target, spec_type)
        ]
    elif kind == "A17":
        out += [
            _remove(l)
            for l in links
            if l.rel_name == "involves" and is_a(l.source, "TestingActivity") and is_a(l.target, "TestingRole")
        ]
    return out
