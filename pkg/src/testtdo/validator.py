"""Model validation: structure, cardinalities, and axioms in one deterministic report.

Diagnostic codes:

* E001  unknown type
* E002  unknown attribute for the individual's type (includes bad
        classification values)
* E010  unknown relationship name
* E011  no relationship row (nor axiom-sanctioned signature) accepts the
        link's endpoint types
* E020  lower-bound cardinality unmet (complete mode; W020 warning in draft)
* E021  upper-bound cardinality exceeded (always an error)
* AX-A1 .. AX-A17  axiom violations, each carrying its witness binding
* W-A1X informational: an individual classified as both an Actual Result and
        an Incident (impossible while individuals have one declared type;
        kept as a guard should multi-typing ever appear)

Lower bounds are the only mode-sensitive checks: a draft model is legitimately
incomplete, but exceeding an "exactly one" bound is wrong in any mode.
Reports are deterministic: diagnostics sort by (code, subjects, message), and
rendering is a pure function of the report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .axioms import builtin_axioms
from .fol import CLASSIFICATION_ATTR, CLASSIFICATION_TAGS, evaluate_with_witness, individual_is
from .kb import KnowledgeBase
from .schema import RelationshipDef, Schema

__all__ = [
    "Diagnostic",
    "ValidationReport",
    "MODES",
    "validate",
    "check_structure",
    "check_cardinalities",
    "check_axioms",
]

MODES = ("draft", "complete")


@dataclass(frozen=True)
class Diagnostic:
    code: str
    severity: str  # "error" | "warning"
    message: str
    subjects: tuple[str, ...]
    axiom_id: str | None = None
    witness: dict[str, str] | None = None

    def sort_key(self) -> tuple:
        return (self.code, self.subjects, self.message)

    def render(self) -> str:
        if self.subjects:
            return f"{self.code} {self.severity} {', '.join(self.subjects)}: {self.message}"
        return f"{self.code} {self.severity}: {self.message}"

    def to_json_dict(self) -> dict:
        out: dict = {
            "code": self.code,
            "severity": self.severity,
            "message": self.message,
            "subjects": list(self.subjects),
        }
        if self.axiom_id is not None:
            out["axiom_id"] = self.axiom_id
        if self.witness is not None:
            out["witness"] = dict(self.witness)
        return out


@dataclass(frozen=True)
class ValidationReport:
    mode: str
    diagnostics: tuple[Diagnostic, ...]

    @property
    def errors(self) -> int:
        return sum(1 for d in self.diagnostics if d.severity == "error")

    @property
    def warnings(self) -> int:
        return sum(1 for d in self.diagnostics if d.severity == "warning")

    @property
    def verdict(self) -> str:
        return "fail" if self.errors else "pass"

    def codes(self) -> tuple[str, ...]:
        return tuple(d.code for d in self.diagnostics)

    def render_text(self) -> str:
        lines = [
            f"verdict: {self.verdict}",
            f"mode: {self.mode}",
            f"errors: {self.errors}",
            f"warnings: {self.warnings}",
        ]
        lines.extend(d.render() for d in self.diagnostics)
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "counts": {"errors": self.errors, "warnings": self.warnings},
            "diagnostics": [d.to_json_dict() for d in self.diagnostics],
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


@dataclass
class _LinkIndex:
    """Outgoing/incoming link maps so cardinality counting is one pass."""

    outgoing: dict[tuple[str, str], list[str]] = field(default_factory=dict)
    incoming: dict[tuple[str, str], list[str]] = field(default_factory=dict)

    @classmethod
    def build(cls, kb: KnowledgeBase) -> "_LinkIndex":
        index = cls()
        for link in kb.links():
            index.outgoing.setdefault((link.source, link.rel_name), []).append(link.target)
            index.incoming.setdefault((link.target, link.rel_name), []).append(link.source)
        return index


def validate(kb: KnowledgeBase, schema: Schema, mode: str = "complete") -> ValidationReport:
    """Run all check families and assemble the deterministic report."""
    if mode not in MODES:
        raise ValueError(f"unknown mode '{mode}' (expected one of {MODES})")
    diagnostics = []
    diagnostics.extend(check_structure(kb, schema))
    diagnostics.extend(check_cardinalities(kb, schema, mode))
    diagnostics.extend(check_axioms(kb, schema))
    diagnostics.sort(key=Diagnostic.sort_key)
    return ValidationReport(mode=mode, diagnostics=tuple(diagnostics))


# ---------------------------------------------------------------------------
# Structure: types, attributes, link names and endpoint conformance
# ---------------------------------------------------------------------------


def check_structure(kb: KnowledgeBase, schema: Schema) -> list[Diagnostic]:
    out = []
    for ind in kb.individuals():
        if not schema.has_term(ind.type_name):
            out.append(Diagnostic("E001", "error", f"unknown type '{ind.type_name}'", (ind.id,)))
            continue
        allowed = {a.attr_name for a in schema.attributes_of(ind.type_name, inherited=True)}
        may_classify = schema.is_subtype(ind.type_name, "TestableEntity")
        for attr_name in sorted(ind.attrs):
            if attr_name == CLASSIFICATION_ATTR and may_classify:
                for token in ind.attrs[attr_name].split(","):
                    token = token.strip()
                    if token not in CLASSIFICATION_TAGS:
                        expected = ", ".join(sorted(CLASSIFICATION_TAGS))
                        out.append(
                            Diagnostic(
                                "E002",
                                "error",
                                f"invalid classification value '{token}' (expected one of: {expected})",
                                (ind.id,),
                            )
                        )
            elif attr_name not in allowed:
                out.append(
                    Diagnostic(
                        "E002",
                        "error",
                        f"unknown attribute '{attr_name}' for type '{ind.type_name}'",
                        (ind.id,),
                    )
                )
    for link in kb.links():
        if link.rel_name in schema.builtin_relations:
            continue
        if not schema.has_relationship(link.rel_name):
            out.append(
                Diagnostic("E010", "error", f"unknown relationship '{link.rel_name}'", (link.source, link.target))
            )
            continue
        source_type = kb.individual(link.source).type_name
        target_type = kb.individual(link.target).type_name
        if not (schema.has_term(source_type) and schema.has_term(target_type)):
            continue  # E001 already reported on the endpoint
        if not schema.link_signature_accepted(link.rel_name, source_type, target_type):
            out.append(
                Diagnostic(
                    "E011",
                    "error",
                    f"no '{link.rel_name}' relationship accepts {source_type} -> {target_type}",
                    (link.source, link.target),
                )
            )
    out.extend(_check_result_exclusivity(kb, schema))
    return out


def _check_result_exclusivity(kb: KnowledgeBase, schema: Schema) -> list[Diagnostic]:
    # Cannot fire while each individual has exactly one declared type
    # (ActualResult and Incident are disjoint siblings); see W-A1X note above.
    out = []
    for ind in kb.individuals():
        if not schema.has_term(ind.type_name):
            continue
        if individual_is(kb, schema, ind.id, "ActualResult") and individual_is(kb, schema, ind.id, "Incident"):
            out.append(
                Diagnostic(
                    "W-A1X",
                    "warning",
                    "classified as both an Actual Result and an Incident; axiom A1 reads them as exclusive",
                    (ind.id,),
                )
            )
    return out


# ---------------------------------------------------------------------------
# Cardinalities compiled from the relationship table
# ---------------------------------------------------------------------------


def check_cardinalities(kb: KnowledgeBase, schema: Schema, mode: str) -> list[Diagnostic]:
    """Enforce target bounds per source individual, and the explicit inverse
    lower bounds (involves, plays, verifies_validates) per target individual.

    Only links whose far endpoint conforms to the row's type count toward that
    row's bounds, so overloaded names (consumes, produces, ...) are counted
    row by row.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode '{mode}' (expected one of {MODES})")
    lower_code, lower_severity = ("E020", "error") if mode == "complete" else ("W020", "warning")
    index = _LinkIndex.build(kb)
    out = []

    def conforming(ids: list[str], type_name: str) -> int:
        count = 0
        for other in ids:
            other_type = kb.individual(other).type_name
            if schema.has_term(other_type) and schema.is_subtype(other_type, type_name):
                count += 1
        return count

    for ind in kb.individuals():
        if not schema.has_term(ind.type_name):
            continue
        for row in schema.relationships:
            if schema.is_subtype(ind.type_name, row.source):
                count = conforming(index.outgoing.get((ind.id, row.rel_name), []), row.target)
                if count < row.target_min:
                    out.append(
                        Diagnostic(
                            lower_code,
                            lower_severity,
                            _bound_message(row, "outgoing", row.target_min, count, at_least=True),
                            (ind.id,),
                        )
                    )
                if row.target_max is not None and count > row.target_max:
                    out.append(
                        Diagnostic(
                            "E021",
                            "error",
                            _bound_message(row, "outgoing", row.target_max, count, at_least=False),
                            (ind.id,),
                        )
                    )
            if row.inverse_checked and schema.is_subtype(ind.type_name, row.target):
                count = conforming(index.incoming.get((ind.id, row.rel_name), []), row.source)
                if count < row.source_min:
                    out.append(
                        Diagnostic(
                            lower_code,
                            lower_severity,
                            _bound_message(row, "incoming", row.source_min, count, at_least=True),
                            (ind.id,),
                        )
                    )
                if row.source_max is not None and count > row.source_max:
                    out.append(
                        Diagnostic(
                            "E021",
                            "error",
                            _bound_message(row, "incoming", row.source_max, count, at_least=False),
                            (ind.id,),
                        )
                    )
    return out


def _bound_message(row: RelationshipDef, direction: str, bound: int, count: int, at_least: bool) -> str:
    word = "requires at least" if at_least else "allows at most"
    return (
        f"relationship '{row.rel_name}' ({row.source} -> {row.target}) "
        f"{word} {bound} {direction} link(s), found {count}"
    )


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------


def check_axioms(kb: KnowledgeBase, schema: Schema) -> list[Diagnostic]:
    out = []
    for axiom_def in builtin_axioms():
        result = evaluate_with_witness(kb, schema, axiom_def.formula)
        if result.value:
            continue
        witness = result.witness or {}
        detail = ", ".join(f"{var}={ind_id}" for var, ind_id in witness.items())
        subjects = tuple(dict.fromkeys(witness.values()))
        out.append(
            Diagnostic(
                code=f"AX-{axiom_def.id}",
                severity="error",
                message=f"axiom {axiom_def.id} does not hold ({detail})",
                subjects=subjects,
                axiom_id=axiom_def.id,
                witness=dict(witness),
            )
        )
    return out
