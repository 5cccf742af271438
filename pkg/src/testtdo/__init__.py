"""Schema-driven validation of software-testing project models.

The package encodes the TestTDO v1.3 testing ontology as an executable
metamodel and checks user-authored instance models (.tkb documents) against
it: structure, relationship cardinalities, and the 17 first-order axioms,
with counterexample witnesses on violations.
"""

from .axioms import AxiomDef, builtin_axioms, check_axiom
from .fol import EvalResult, evaluate, evaluate_with_witness
from .generator import GenConfig, generate_conforming, minimal_motif, perturb
from .kb import KnowledgeBase
from .schema import Schema, builtin_schema
from .tkb import ParseDiagnostic, ParseError, parse, serialize
from .validator import Diagnostic, ValidationReport, validate

__version__ = "0.1.0"

__all__ = [
    "AxiomDef",
    "Diagnostic",
    "EvalResult",
    "GenConfig",
    "KnowledgeBase",
    "ParseDiagnostic",
    "ParseError",
    "Schema",
    "ValidationReport",
    "builtin_axioms",
    "builtin_schema",
    "check_axiom",
    "evaluate",
    "evaluate_with_witness",
    "generate_conforming",
    "minimal_motif",
    "parse",
    "perturb",
    "serialize",
    "validate",
    "__version__",
]
