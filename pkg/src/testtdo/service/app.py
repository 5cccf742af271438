"""HTTP surface over the validator core.

Run with:  uvicorn testtdo.service.app:app

Documents are submitted as .tkb text in JSON bodies; parse failures come back
as 400 with the parser's line/column diagnostics, unknown names as 404.
Validation itself never fails the request; findings are the response.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, axioms, fol, tkb
from ..generator import GenConfig, generate_conforming
from ..schema import builtin_schema
from ..validator import validate
from . import models

app = FastAPI(
    title="TestTDO model validator",
    description="Validates software-testing project models against the TestTDO v1.3 ontology.",
    version=__version__,
)


def _parse_or_400(document: str):
    try:
        return tkb.parse(document)
    except tkb.ParseError as exc:
        detail = {
            "diagnostics": [
                models.ParseDiagnosticModel(line=d.line, column=d.column, message=d.message).model_dump()
                for d in exc.diagnostics
            ]
        }
        raise HTTPException(status_code=400, detail=detail) from None


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/validate", response_model=models.ReportModel, response_model_exclude_none=True)
def validate_document(request: models.ValidateRequest):
    kb = _parse_or_400(request.document)
    return validate(kb, builtin_schema(), request.mode).to_json_dict()


@app.get("/schema/counts", response_model=models.SchemaCountsModel)
def schema_counts():
    counts = builtin_schema().counts()
    return {
        "own": counts.own,
        "reused": counts.reused,
        "attributes": counts.attributes,
        "relationships": counts.relationships,
        "axioms": len(axioms.builtin_axioms()),
    }


@app.get("/schema/terms", response_model=list[models.TermModel])
def schema_terms(term: str | None = None):
    schema = builtin_schema()
    if term is not None and not schema.has_term(term):
        raise HTTPException(status_code=404, detail=f"unknown term '{term}'")
    names = [term] if term else list(schema.term_names())
    out = []
    for name in names:
        record = schema.term(name)
        out.append(
            {
                "canonical_name": record.canonical_name,
                "display_name": record.display_name,
                "synonyms": list(record.synonyms),
                "definition": record.definition,
                "provenance": record.provenance,
                "kind": record.kind,
            }
        )
    return out


@app.get("/schema/attrs", response_model=list[models.AttributeModel])
def schema_attrs(term: str | None = None):
    schema = builtin_schema()
    if term is not None and not schema.has_term(term):
        raise HTTPException(status_code=404, detail=f"unknown term '{term}'")
    rows = [a for a in schema.attributes if term is None or a.owner == term]
    return [{"owner": a.owner, "attr_name": a.attr_name, "definition": a.definition} for a in rows]


@app.get("/schema/rels", response_model=list[models.RelationshipModel])
def schema_rels(name: str = "*"):
    rows = builtin_schema().relationship_defs(name)
    return [
        {
            "rel_name": r.rel_name,
            "source": r.source,
            "target": r.target,
            "source_min": r.source_min,
            "source_max": r.source_max,
            "target_min": r.target_min,
            "target_max": r.target_max,
            "definition": r.definition,
        }
        for r in rows
    ]


@app.get("/axioms", response_model=list[models.AxiomSummaryModel])
def axioms_list():
    return [{"id": a.id, "description": a.description} for a in axioms.builtin_axioms()]


@app.get("/axioms/{axiom_id}", response_model=models.AxiomModel)
def axioms_show(axiom_id: str):
    try:
        axiom_def = axioms.axiom(axiom_id)
    except axioms.UnknownAxiomError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from None
    return {
        "id": axiom_def.id,
        "description": axiom_def.description,
        "deviations": list(axiom_def.deviations),
        "formula": fol.render(axiom_def.formula),
    }


@app.post("/generate", response_model=models.DocumentModel)
def generate(request: models.GenerateRequest):
    kb = generate_conforming(GenConfig(seed=request.seed, size=request.size))
    return {"document": tkb.serialize(kb)}


@app.post("/fmt", response_model=models.DocumentModel)
def fmt(request: models.DocumentModel):
    return {"document": tkb.serialize(_parse_or_400(request.document))}
