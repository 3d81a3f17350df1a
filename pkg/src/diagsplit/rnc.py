"""Residual normal crossings relative to an ordered list of variables."""

from __future__ import annotations

from collections.abc import Sequence

from .algebra import Polynomial, Var


def _positions(f: Polynomial, order: Sequence[Var]) -> list[int]:
    order = list(order)
    if len(set(order)) != len(order):
        raise ValueError("variable order contains duplicates")
    missing = f.variables() - set(order)
    if missing:
        names = ", ".join(sorted(str(v) for v in missing))
        raise ValueError(f"variables of f missing from the order: {names}")
    for v in order:
        if v not in f.ring:
            raise ValueError(f"{v} is not in the table")
    return f.ring.indices(order)


def has_rnc(f: Polynomial, order: Sequence[Var]) -> bool:
    """x_1 | f, then recurse on (f / x_1) with x_1 -> 0 over the remaining order."""
    idx = _positions(f, order)
    terms = list(f.terms)
    for k in idx:
        step = []
        for e in terms:
            x = e[k]
            if x == 0:
                return False
            if x == 1:
                step.append(e[:k] + (0,) + e[k + 1:])
        if not step:
            return False
        terms = step
    return bool(terms)


def rnc_minimal_monomial(f: Polynomial, order: Sequence[Var]) -> Polynomial | None:
    """The product of the order variables when f has rnc, else None.

    Also confirms that this product is the lex-minimal term of f when the
    order is read with descending significance.
    """
    idx = _positions(f, order)
    if not has_rnc(f, order):
        return None
    lowest = min(tuple(e[k] for k in idx) for e in f.terms)
    if lowest != (1,) * len(idx):
        raise AssertionError(f"rnc polynomial with lex-minimal exponent {lowest}")
    ring = f.ring
    return ring.monomial({v: 1 for v in order})
