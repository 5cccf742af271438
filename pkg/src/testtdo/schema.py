"""Executable metamodel of the TestTDO v1.3 software-testing ontology.

The registry holds every term (44 own or extended, 4 completely reused, plus
the imported upper-layer stubs needed to close the taxonomy), the taxonomy
edges implied by the term definitions, the 51 attributes, and the 43
non-taxonomic relationships with extracted multiplicities.  It is immutable
after construction and self-checks its structural invariants on first use, so
a corrupted table is a startup failure rather than a latent misvalidation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import _tables

__all__ = [
    "TermDef",
    "TaxonomyEdge",
    "AttributeDef",
    "RelationshipDef",
    "Schema",
    "SchemaCounts",
    "SchemaIntegrityError",
    "UnknownTermError",
    "builtin_schema",
]

TERM_KINDS = ("own_or_extended", "reused", "imported_stub")
PROVENANCES = ("TestTDO", "TFO", "SCO", "ProcCO", "ProjCO", "GCO", "NFRsTDO", "FRsTDO")


class SchemaIntegrityError(Exception):
    """The built-in tables violate a structural invariant (programming error)."""


class UnknownTermError(KeyError):
    """A term name referenced in a query is not registered."""

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown term '{self.name}'"


@dataclass(frozen=True)
class TermDef:
    canonical_name: str
    display_name: str
    synonyms: tuple[str, ...]
    definition: str
    provenance: str
    kind: str


class TaxonomyEdge(NamedTuple):
    child: str
    parent: str


@dataclass(frozen=True)
class AttributeDef:
    owner: str
    attr_name: str
    definition: str


@dataclass(frozen=True)
class RelationshipDef:
    rel_name: str
    source: str
    target: str
    source_min: int
    source_max: int | None  # None = unbounded
    target_min: int
    target_max: int | None
    definition: str

    @property
    def inverse_checked(self) -> bool:
        """True when the defining sentence states an explicit inverse bound."""
        return self.source_min > 0


class SchemaCounts(NamedTuple):
    own: int
    reused: int
    attributes: int
    relationships: int


@dataclass(frozen=True)
class Schema:
    """Immutable term/taxonomy/attribute/relationship registry."""

    terms: dict[str, TermDef]
    taxonomy: frozenset[TaxonomyEdge]
    attributes: tuple[AttributeDef, ...]
    relationships: tuple[RelationshipDef, ...]
    builtin_relations: frozenset[str]
    axiom_link_extensions: frozenset[tuple[str, str, str]]
    _ancestor_map: dict[str, frozenset[str]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._check_integrity()
        object.__setattr__(self, "_ancestor_map", self._compute_ancestors())

    # -- queries -----------------------------------------------------------

    def has_term(self, name: str) -> bool:
        return name in self.terms

    def term(self, name: str) -> TermDef:
        try:
            return self.terms[name]
        except KeyError:
            raise UnknownTermError(name) from None

    def term_names(self) -> tuple[str, ...]:
        return tuple(sorted(self.terms))

    def ancestors(self, name: str) -> frozenset[str]:
        """All supertypes of ``name``, including itself."""
        self.term(name)
        return self._ancestor_map[name]

    def is_subtype(self, child: str, ancestor: str) -> bool:
        """Reflexive-transitive subtype test over the taxonomy."""
        self.term(ancestor)
        return ancestor in self.ancestors(child)

    def parents(self, name: str) -> tuple[str, ...]:
        self.term(name)
        return tuple(sorted(edge.parent for edge in self.taxonomy if edge.child == name))

    def attributes_of(self, name: str, inherited: bool = False) -> tuple[AttributeDef, ...]:
        """Attributes owned by ``name``; with inherited=True, by any ancestor.

        A redefinition on a more derived term shadows the ancestor's row of
        the same attribute name.
        """
        self.term(name)
        if not inherited:
            return tuple(a for a in self.attributes if a.owner == name)
        # Rank owners by taxonomy depth: most derived wins on name clashes;
        # owners visited in sorted order so diamond ties resolve stably.
        chosen: dict[str, tuple[int, AttributeDef]] = {}
        for owner in sorted(self.ancestors(name)):
            depth = len(self.ancestors(owner))
            for attr in self.attributes:
                if attr.owner != owner:
                    continue
                prev = chosen.get(attr.attr_name)
                if prev is None or depth > prev[0]:
                    chosen[attr.attr_name] = (depth, attr)
        return tuple(attr for _, attr in sorted(chosen.values(), key=lambda pair: pair[1].attr_name))

    def relationship_defs(self, rel_name: str = "*") -> tuple[RelationshipDef, ...]:
        """Rows matching the name; "*" returns all. Unknown names yield ()."""
        if rel_name == "*":
            return self.relationships
        return tuple(r for r in self.relationships if r.rel_name == rel_name)

    def has_relationship(self, rel_name: str) -> bool:
        return any(r.rel_name == rel_name for r in self.relationships)

    def relationship_names(self) -> frozenset[str]:
        return frozenset(r.rel_name for r in self.relationships)

    def attribute_names(self) -> frozenset[str]:
        return frozenset(a.attr_name for a in self.attributes)

    def link_signature_accepted(self, rel_name: str, source_type: str, target_type: str) -> bool:
        """Most-permissive endpoint check used by link-conformance validation.

        True when any relationship row with that name (or any axiom-sanctioned
        extension signature) accepts both endpoint types.  Both endpoint types
        must be registered.
        """
        for row in self.relationship_defs(rel_name):
            if self.is_subtype(source_type, row.source) and self.is_subtype(target_type, row.target):
                return True
        for ext_name, ext_source, ext_target in self.axiom_link_extensions:
            if ext_name != rel_name:
                continue
            if self.is_subtype(source_type, ext_source) and self.is_subtype(target_type, ext_target):
                return True
        return False

    def counts(self) -> SchemaCounts:
        return SchemaCounts(
            own=sum(1 for t in self.terms.values() if t.kind == "own_or_extended"),
            reused=sum(1 for t in self.terms.values() if t.kind == "reused"),
            attributes=len(self.attributes),
            relationships=len(self.relationships),
        )

    # -- construction-time checks -------------------------------------------

    def _check_integrity(self) -> None:
        names = list(self.terms)
        if len(set(names)) != len(names):
            raise SchemaIntegrityError("duplicate canonical term names")
        for term in self.terms.values():
            if term.kind not in TERM_KINDS:
                raise SchemaIntegrityError(f"bad kind on {term.canonical_name}")
            if term.provenance not in PROVENANCES:
                raise SchemaIntegrityError(f"bad provenance on {term.canonical_name}")
            if term.kind != "own_or_extended" and term.provenance == "TestTDO":
                raise SchemaIntegrityError(f"{term.canonical_name}: reused/stub terms need a non-TestTDO provenance")
        for edge in self.taxonomy:
            if edge.child not in self.terms or edge.parent not in self.terms:
                raise SchemaIntegrityError(f"taxonomy edge with unregistered endpoint: {edge}")
        seen_attrs = set()
        for attr in self.attributes:
            if attr.owner not in self.terms:
                raise SchemaIntegrityError(f"attribute owner not registered: {attr.owner}")
            key = (attr.owner, attr.attr_name)
            if key in seen_attrs:
                raise SchemaIntegrityError(f"duplicate attribute row: {key}")
            seen_attrs.add(key)
        seen_rels = set()
        for rel in self.relationships:
            if rel.source not in self.terms or rel.target not in self.terms:
                raise SchemaIntegrityError(f"relationship endpoint not registered: {rel.rel_name}")
            key = (rel.rel_name, rel.source, rel.target)
            if key in seen_rels:
                raise SchemaIntegrityError(f"duplicate relationship row: {key}")
            seen_rels.add(key)
            if rel.target_max is not None and rel.target_max < rel.target_min:
                raise SchemaIntegrityError(f"inverted target bounds on {key}")
            if rel.source_max is not None and rel.source_max < rel.source_min:
                raise SchemaIntegrityError(f"inverted source bounds on {key}")
        for ext in self.axiom_link_extensions:
            if ext[1] not in self.terms or ext[2] not in self.terms:
                raise SchemaIntegrityError(f"extension signature endpoint not registered: {ext}")

    def _compute_ancestors(self) -> dict[str, frozenset[str]]:
        parents: dict[str, set[str]] = {name: set() for name in self.terms}
        for edge in self.taxonomy:
            parents[edge.child].add(edge.parent)

        resolved: dict[str, frozenset[str]] = {}
        resolving: set[str] = set()

        def resolve(name: str) -> frozenset[str]:
            if name in resolved:
                return resolved[name]
            if name in resolving:
                raise SchemaIntegrityError(f"taxonomy cycle through '{name}'")
            resolving.add(name)
            acc = {name}
            for parent in parents[name]:
                acc |= resolve(parent)
            resolving.discard(name)
            resolved[name] = frozenset(acc)
            return resolved[name]

        for name in self.terms:
            resolve(name)
        return resolved


def _build(term_rows: Iterable[tuple], attr_rows: Iterable[tuple], rel_rows: Iterable[tuple]) -> Schema:
    terms: dict[str, TermDef] = {}
    edges: set[TaxonomyEdge] = set()
    for canonical, display, synonyms, provenance, kind, parents, definition in term_rows:
        terms[canonical] = TermDef(
            canonical_name=canonical,
            display_name=display,
            synonyms=tuple(synonyms),
            definition=definition,
            provenance=provenance,
            kind=kind,
        )
        for parent in parents:
            edges.add(TaxonomyEdge(canonical, parent))
    attributes = tuple(AttributeDef(*row) for row in attr_rows)
    relationships = tuple(RelationshipDef(*row) for row in rel_rows)
    return Schema(
        terms=terms,
        taxonomy=frozenset(edges),
        attributes=attributes,
        relationships=relationships,
        builtin_relations=_tables.BUILTIN_RELATIONS,
        axiom_link_extensions=_tables.AXIOM_LINK_EXTENSIONS,
    )


@lru_cache(maxsize=1)
def builtin_schema() -> Schema:
    """The complete built-in metamodel (constructed once, then shared).

    Table corruption surfaces here as SchemaIntegrityError; there is no way to
    load a different schema at runtime.
    """
    schema = _build(_tables.TERM_ROWS, _tables.ATTRIBUTE_ROWS, _tables.RELATIONSHIP_ROWS)
    counts = schema.counts()
    expected = SchemaCounts(own=44, reused=4, attributes=51, relationships=43)
    if counts != expected:
        raise SchemaIntegrityError(f"table counts {counts} != expected {expected}")
    for attr in schema.attributes:
        if schema.term(attr.owner).kind != "own_or_extended":
            raise SchemaIntegrityError(f"attribute on non-own term: {attr}")
    return schema
