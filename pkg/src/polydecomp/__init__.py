"""Exact functional decomposition of univariate polynomials over the rationals."""

__version__ = "0.1.0"

from .poly import LinearPoly, Polynomial, compose, resultant  # noqa: E402
from .parse import ParseError, canonical_text, parse  # noqa: E402
from .decompose import (  # noqa: E402
    Decomposition,
    DecompositionError,
    InvariantViolation,
    NormalizedPair,
    complete_decompositions,
    decompose_once,
    equivalent,
    normalize,
    ritt_swap,
)

__all__ = [
    "Decomposition",
    "DecompositionError",
    "InvariantViolation",
    "LinearPoly",
    "NormalizedPair",
    "ParseError",
    "Polynomial",
    "canonical_text",
    "complete_decompositions",
    "compose",
    "decompose_once",
    "equivalent",
    "normalize",
    "parse",
    "resultant",
    "ritt_swap",
]
