"""Exact arithmetic over prime fields: variables, sparse polynomials, symbolic matrices."""

from .field import Characteristic, is_prime
from .linalg import nullspace_mod_p
from .matrix import SymbolicMatrix, determinant, identity, lower_left_minor
from .poly import IncompatibleContext, Polynomial, PolyRing, parse_polynomial
from .variables import T, V, Var, X, Y, Z, parse_var, partner

__all__ = [
    "Characteristic",
    "IncompatibleContext",
    "PolyRing",
    "Polynomial",
    "SymbolicMatrix",
    "T",
    "V",
    "Var",
    "X",
    "Y",
    "Z",
    "determinant",
    "identity",
    "is_prime",
    "lower_left_minor",
    "nullspace_mod_p",
    "parse_polynomial",
    "parse_var",
    "partner",
]
