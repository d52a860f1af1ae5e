"""Parse, type-check and evaluate morphism expressions."""

from .check import DslTypeError, push_dagger, typecheck
from .semantics import (EvaluationError, Interpretation, NoDaggerError, cob_interpretation,
                        evaluate)
from .syntax import (CIRCLE, Compose, Dagger, Gen, Id, ParseError, Signature, SignatureError,
                     Tensor, Term, cob_signature, parse, parse_expr, parse_signature, strip,
                     to_source)

__all__ = [
    "CIRCLE", "Compose", "Dagger", "DslTypeError", "EvaluationError", "Gen", "Id",
    "Interpretation", "NoDaggerError", "ParseError", "Signature", "SignatureError", "Tensor",
    "Term", "cob_interpretation", "cob_signature", "evaluate", "parse", "parse_expr",
    "parse_signature", "push_dagger", "strip", "to_source", "typecheck",
]
