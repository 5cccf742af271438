"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..generator import MAX_SIZE


class ValidateRequest(BaseModel):
    document: str
    mode: Literal["draft", "complete"] = "complete"


class CountsModel(BaseModel):
    errors: int
    warnings: int


class DiagnosticModel(BaseModel):
    code: str
    severity: Literal["error", "warning"]
    message: str
    subjects: list[str]
    axiom_id: str | None = None
    witness: dict[str, str] | None = None


class ReportModel(BaseModel):
    verdict: Literal["pass", "fail"]
    mode: Literal["draft", "complete"]
    counts: CountsModel
    diagnostics: list[DiagnosticModel]


class ParseDiagnosticModel(BaseModel):
    line: int
    column: int
    message: str


class SchemaCountsModel(BaseModel):
    own: int
    reused: int
    attributes: int
    relationships: int
    axioms: int


class TermModel(BaseModel):
    canonical_name: str
    display_name: str
    synonyms: list[str]
    definition: str
    provenance: str
    kind: str


class AttributeModel(BaseModel):
    owner: str
    attr_name: str
    definition: str


class RelationshipModel(BaseModel):
    rel_name: str
    source: str
    target: str
    source_min: int
    source_max: int | None
    target_min: int
    target_max: int | None
    definition: str


class AxiomSummaryModel(BaseModel):
    id: str
    description: str


class AxiomModel(AxiomSummaryModel):
    deviations: list[str]
    formula: str


class GenerateRequest(BaseModel):
    seed: int = Field(ge=0, lt=2**64)
    size: int = Field(ge=0, le=MAX_SIZE)


class DocumentModel(BaseModel):
    document: str
