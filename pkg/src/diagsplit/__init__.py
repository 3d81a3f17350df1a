"""Diagonal Frobenius splittings of flag varieties, verified on the big cell."""

from .algebra import PolyRing, Polynomial, Var, X, Y, Z, V, T
from .splitting import DiagonalPairing, SplittingOperator, apply, is_splitting

__version__ = "0.1.0"

__all__ = [
    "DiagonalPairing",
    "PolyRing",
    "Polynomial",
    "SplittingOperator",
    "T",
    "V",
    "Var",
    "X",
    "Y",
    "Z",
    "apply",
    "is_splitting",
]
