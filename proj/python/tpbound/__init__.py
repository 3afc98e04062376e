"""Bracket ratios over totally positive matrices."""

from ._core import (
    Ratio,
    TpboundError,
    basic_count,
    basics,
    check,
    cone,
    counterexample_matrix,
    evaluate,
    factor,
    falsify,
    random_tp,
    reverse_matrix,
    shift_matrix,
    subtraction_free,
    verify_tp,
)

__all__ = [
    "Ratio",
    "TpboundError",
    "basic_count",
    "basics",
    "check",
    "cone",
    "counterexample_matrix",
    "evaluate",
    "factor",
    "falsify",
    "random_tp",
    "reverse_matrix",
    "shift_matrix",
    "subtraction_free",
    "verify_tp",
]
