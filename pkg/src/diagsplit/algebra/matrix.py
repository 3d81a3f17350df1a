"""Matrices with polynomial entries and division-free determinants."""

from __future__ import annotations

from collections.abc import Sequence

from .poly import IncompatibleContext, Polynomial, PolyRing


class SymbolicMatrix:
    """Dense rows x cols grid of polynomials over one ring."""

    def __init__(self, ring: PolyRing, entries: Sequence[Sequence[Polynomial | int]]):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        grid = []
        for r in rows:
            out = []
            for a in r:
                if isinstance(a, int):
                    a = ring.const(a)
                elif a.ring != ring:
                    raise IncompatibleContext()
                out.append(a)
            grid.append(tuple(out))
        self.ring = ring
        self.entries = tuple(grid)
        self.rows = len(grid)
        self.cols = cols

    def __getitem__(self, rc: tuple[int, int]) -> Polynomial:
        return self.entries[rc[0]][rc[1]]

    def __eq__(self, other):
        return isinstance(other, SymbolicMatrix) and self.ring == other.ring and self.entries == other.entries

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self.entries)
        return f"SymbolicMatrix[{body}]"

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> SymbolicMatrix:
        """0-based row and column selections, order preserved."""
        return SymbolicMatrix(self.ring, [[self.entries[r][c] for c in cols] for r in rows])

    def column(self, c: int) -> tuple[Polynomial, ...]:
        return tuple(r[c] for r in self.entries)

    def diagonal(self) -> list[Polynomial]:
        return [self.entries[k][k] for k in range(min(self.rows, self.cols))]

    def determinant(self) -> Polynomial:
        return determinant(self)

    def lower_left_minor(self, i: int) -> Polynomial:
        return lower_left_minor(self, i)


def determinant(m: SymbolicMatrix) -> Polynomial:
    """Determinant by dynamic programming over column subsets.

    Row r is matched to a column c not yet used; the partial sums are indexed
    by the bitmask of used columns, and the permutation sign picks up one
    inversion for every used column to the right of c.  O(2^k * k) polynomial
    products, no division.
    """
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    k = m.rows
    ring = m.ring
    layer: dict[int, Polynomial] = {0: ring.one}
    for r in range(k):
        row = m.entries[r]
        nxt: dict[int, Polynomial] = {}
        for mask, acc in layer.items():
            for c in range(k):
                bit = 1 << c
                if mask & bit or row[c].is_zero():
                    continue
                term = acc * row[c]
                if bin(mask >> (c + 1)).count("1") % 2:
                    term = -term
                nm = mask | bit
                nxt[nm] = nxt[nm] + term if nm in nxt else term
        layer = {mk: v for mk, v in nxt.items() if not v.is_zero()}
        if not layer:
            return ring.zero
    return layer.get((1 << k) - 1, ring.zero)


def lower_left_minor(m: SymbolicMatrix, i: int) -> Polynomial:
    """Minor on the bottom i rows and the first i columns."""
    if not 1 <= i <= min(m.rows, m.cols):
        raise ValueError(f"minor size {i} out of range for a {m.rows}x{m.cols} matrix")
    return determinant(m.submatrix(range(m.rows - i, m.rows), range(i)))


def identity(ring: PolyRing, k: int) -> SymbolicMatrix:
    return SymbolicMatrix(ring, [[1 if r == c else 0 for c in range(k)] for r in range(k)])
