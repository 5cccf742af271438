"""In-memory instance model: typed individuals with attribute values plus links.

A model is built single-writer (add/remove/retype), then ``finalize()`` checks
that every link endpoint resolves and freezes it.  Finalized models are safe
for concurrent reads and are what the evaluator and validator operate on.
Unknown type names are accepted at build time on purpose: reporting them is
the validator's job, not the builder's.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple

from .schema import Schema

__all__ = [
    "Individual",
    "Link",
    "KnowledgeBase",
    "DuplicateIdError",
    "DanglingLinkError",
    "FrozenKbError",
]


class DuplicateIdError(ValueError):
    def __init__(self, ind_id: str):
        super().__init__(f"duplicate individual id '{ind_id}'")
        self.ind_id = ind_id


class DanglingLinkError(ValueError):
    """finalize() found links whose endpoints are not declared."""

    def __init__(self, missing: list[tuple["Link", str]]):
        self.missing = missing
        names = ", ".join(sorted({f"'{ind_id}'" for _, ind_id in missing}))
        super().__init__(f"links reference undeclared individuals: {names}")


class FrozenKbError(RuntimeError):
    def __init__(self) -> None:
        super().__init__("knowledge base is finalized and cannot be modified")


@dataclass(frozen=True)
class Individual:
    id: str
    type_name: str
    attrs: Mapping[str, str]


class Link(NamedTuple):
    rel_name: str
    source: str
    target: str


@dataclass
class KnowledgeBase:
    _individuals: dict[str, Individual] = field(default_factory=dict)
    _links: set[Link] = field(default_factory=set)
    _finalized: bool = False
    # Query caches, only populated once finalized (keyed by schema identity).
    _ids_cache: tuple[str, ...] | None = field(default=None, repr=False)
    _instances_cache: dict = field(default_factory=dict, repr=False)

    # -- construction --------------------------------------------------------

    def add_individual(self, ind_id: str, type_name: str, attrs: Mapping[str, str] | None = None) -> None:
        self._check_mutable()
        if not ind_id:
            raise ValueError("individual id must be non-empty")
        if ind_id in self._individuals:
            raise DuplicateIdError(ind_id)
        self._individuals[ind_id] = Individual(ind_id, type_name, dict(attrs or {}))

    def add_link(self, rel_name: str, source: str, target: str) -> None:
        """Insert a link; identical links collapse (set semantics).

        Endpoint existence is only enforced by finalize(), so links may
        reference individuals declared later.
        """
        self._check_mutable()
        self._links.add(Link(rel_name, source, target))

    def remove_link(self, rel_name: str, source: str, target: str) -> None:
        self._check_mutable()
        self._links.discard(Link(rel_name, source, target))

    def set_type(self, ind_id: str, type_name: str) -> None:
        self._check_mutable()
        old = self._individuals[ind_id]
        self._individuals[ind_id] = Individual(ind_id, type_name, old.attrs)

    def set_attr(self, ind_id: str, attr_name: str, value: str | None) -> None:
        """Set or (with value=None) drop an attribute."""
        self._check_mutable()
        old = self._individuals[ind_id]
        attrs = dict(old.attrs)
        if value is None:
            attrs.pop(attr_name, None)
        else:
            attrs[attr_name] = value
        self._individuals[ind_id] = Individual(ind_id, old.type_name, attrs)

    def finalize(self) -> "KnowledgeBase":
        """Check link endpoints and freeze; returns self for chaining."""
        missing = []
        for link in self._links:
            for endpoint in (link.source, link.target):
                if endpoint not in self._individuals:
                    missing.append((link, endpoint))
        if missing:
            raise DanglingLinkError(missing)
        self._finalized = True
        return self

    def copy(self) -> "KnowledgeBase":
        """Mutable copy with the same content (always unfinalized)."""
        clone = KnowledgeBase()
        for ind in self._individuals.values():
            clone.add_individual(ind.id, ind.type_name, ind.attrs)
        for link in self._links:
            clone._links.add(link)
        return clone

    def _check_mutable(self) -> None:
        if self._finalized:
            raise FrozenKbError()

    # -- queries --------------------------------------------------------------

    @property
    def finalized(self) -> bool:
        return self._finalized

    def __len__(self) -> int:
        return len(self._individuals)

    def __contains__(self, ind_id: str) -> bool:
        return ind_id in self._individuals

    def ids(self) -> tuple[str, ...]:
        if self._finalized:
            if self._ids_cache is None:
                self._ids_cache = tuple(sorted(self._individuals))
            return self._ids_cache
        return tuple(sorted(self._individuals))

    def individual(self, ind_id: str) -> Individual:
        return self._individuals[ind_id]

    def individuals(self) -> Iterator[Individual]:
        for ind_id in self.ids():
            yield self._individuals[ind_id]

    def links(self) -> tuple[Link, ...]:
        return tuple(sorted(self._links))

    def has_link(self, rel_name: str, source: str, target: str) -> bool:
        return Link(rel_name, source, target) in self._links

    def links_from(self, source: str, rel_name: str) -> tuple[Link, ...]:
        return tuple(sorted(l for l in self._links if l.source == source and l.rel_name == rel_name))

    def links_to(self, target: str, rel_name: str) -> tuple[Link, ...]:
        return tuple(sorted(l for l in self._links if l.target == target and l.rel_name == rel_name))

    def instances_of(self, schema: Schema, type_name: str, transitive: bool = True) -> tuple[str, ...]:
        """Ids typed exactly ``type_name``, or as any subtype when transitive.

        Individuals with unregistered declared types never match; the
        validator reports those separately.
        """
        key = (id(schema), type_name, transitive)
        if self._finalized and key in self._instances_cache:
            return self._instances_cache[key]
        schema.term(type_name)
        out = []
        for ind in self.individuals():
            if transitive:
                if schema.has_term(ind.type_name) and schema.is_subtype(ind.type_name, type_name):
                    out.append(ind.id)
            elif ind.type_name == type_name:
                out.append(ind.id)
        result = tuple(out)
        if self._finalized:
            self._instances_cache[key] = result
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return self._individuals == other._individuals and self._links == other._links

    def __repr__(self) -> str:
        return f"KnowledgeBase({len(self._individuals)} individuals, {len(self._links)} links)"
