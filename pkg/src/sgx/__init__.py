"""Support-graph semantics for labelled propositional logic programs."""

from .core import (
    Atom,
    DuplicateAtomError,
    DuplicateLabelError,
    Explanation,
    Interpretation,
    Label,
    ProgramClass,
    ProofTree,
    Program,
    Rule,
    SgxError,
    classify,
    interpretation,
    validate_program,
)
from .encoding import (
    BijectionReport,
    GroundEncoding,
    answer_sets_of_encoding,
    crosscheck_bijection,
    emit_program_encoding,
    ground_encoding,
)
from .explain import (
    ModelMismatchError,
    ModelReport,
    ModelSummary,
    NotAModelError,
    NotStableError,
    classify_models,
    construct_stable_explanation,
    enumerate_explanations,
    enumerate_support_graphs,
    is_justified,
    is_supported,
    validate_explanation,
)
from .parser import ParseError, SourceSpan, parse_model, parse_program, render_program
from .proof import AtomNotInModelError, build_proof, render_proof
from .propgen import FuzzReport, GenConfig, OracleReport, oracle_check, random_program, run_fuzz
from .semantics import (
    DisjunctiveProgramError,
    SignatureTooLargeError,
    enumerate_models,
    enumerate_stable,
    horn_least_model,
    is_model,
    is_stable,
    reduct,
    satisfies_body,
    support,
    tp_step,
)

__all__ = [
    "Atom",
    "AtomNotInModelError",
    "BijectionReport",
    "DisjunctiveProgramError",
    "DuplicateAtomError",
    "DuplicateLabelError",
    "Explanation",
    "FuzzReport",
    "GenConfig",
    "GroundEncoding",
    "Interpretation",
    "Label",
    "ModelMismatchError",
    "ModelReport",
    "ModelSummary",
    "NotAModelError",
    "NotStableError",
    "OracleReport",
    "ParseError",
    "Program",
    "ProgramClass",
    "ProofTree",
    "Rule",
    "SgxError",
    "SignatureTooLargeError",
    "SourceSpan",
    "answer_sets_of_encoding",
    "build_proof",
    "classify",
    "classify_models",
    "construct_stable_explanation",
    "crosscheck_bijection",
    "emit_program_encoding",
    "enumerate_explanations",
    "enumerate_models",
    "enumerate_stable",
    "enumerate_support_graphs",
    "ground_encoding",
    "horn_least_model",
    "interpretation",
    "is_justified",
    "is_model",
    "is_stable",
    "is_supported",
    "oracle_check",
    "parse_model",
    "parse_program",
    "random_program",
    "reduct",
    "render_proof",
    "render_program",
    "run_fuzz",
    "satisfies_body",
    "support",
    "tp_step",
    "validate_explanation",
    "validate_program",
]
