"""Kempf varieties on the chart: vectors, rectangles, variable ideals, compatibility."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .algebra import Polynomial, Var, X, Y, nullspace_mod_p
from .splitting import Principal, SplittingOperator, Sum, Variables, compatibly_splits


def is_kempf_vector(a: Sequence[int], n: int) -> bool:
    """a_1 >= ... >= a_n = 0 and n - a_j >= j for every j."""
    a = tuple(a)
    if len(a) != n:
        raise ValueError(f"Kempf vector of length {len(a)} for n={n}")
    if any(x < 0 for x in a) or a[-1] != 0:
        return False
    if any(a[j] < a[j + 1] for j in range(n - 1)):
        return False
    return all(n - a[j - 1] >= j for j in range(1, n + 1))


def parse_kempf(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def format_kempf(a: Sequence[int]) -> str:
    return ",".join(str(x) for x in a)


def kempf_vectors(n: int) -> list[tuple[int, ...]]:
    """All of A for SL_n, by extending weakly decreasing prefixes under the staircase bound."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...]):
        j = len(prefix) + 1
        if j == n:
            out.append(prefix + (0,))
            return
        top = min(n - j, prefix[-1] if prefix else n)
        for x in range(top, -1, -1):
            rec(prefix + (x,))

    rec(())
    return sorted(out)


def codimension(a: Sequence[int]) -> int:
    return sum(a)


@dataclass(frozen=True, order=True)
class RectangularKempf:
    n: int
    t: int  # height
    s: int  # width

    def __post_init__(self):
        if self.t < 1 or self.s < 1 or self.s + self.t > self.n:
            raise ValueError(f"no rectangular Kempf vector of height {self.t} and width {self.s} for n={self.n}")

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(self.t if k < self.s else 0 for k in range(self.n))

    def __str__(self):
        return format_kempf(self.vector)


def rectangular_vectors(n: int) -> list[RectangularKempf]:
    if n < 2:
        raise ValueError("n must be >= 2")
    return [RectangularKempf(n, t, s) for t in range(1, n) for s in range(1, n - t + 1)]


def decompose_into_rectangulars(a: Sequence[int]) -> list[RectangularKempf]:
    """One rectangle per distinct nonzero value t, of width #{j : a_j >= t}."""
    a = tuple(a)
    n = len(a)
    if not is_kempf_vector(a, n):
        raise ValueError(f"{a} is not a Kempf vector")
    rects = [RectangularKempf(n, t, sum(1 for x in a if x >= t)) for t in sorted(set(a) - {0}, reverse=True)]
    union: set[Var] = set()
    for r in rects:
        union |= kempf_vars(r.vector)
    if union != kempf_vars(a):
        raise AssertionError(f"rectangles of {a} do not cut out the same variables")
    return rects


def kempf_vars(a: Sequence[int] | RectangularKempf, doubled: bool = False) -> set[Var]:
    """Chart variables vanishing on K(a): x_ij with i > n - a_j (and y_ij when doubled)."""
    if isinstance(a, RectangularKempf):
        a = a.vector
    a = tuple(a)
    n = len(a)
    out: set[Var] = set()
    for j in range(1, n + 1):
        for i in range(max(j + 1, n - a[j - 1] + 1), n + 1):
            out.add(X(i, j))
            if doubled:
                out.add(Y(i, j))
    return out


def check_kempf_compat(n: int, p: int, a: Sequence[int], op: SplittingOperator | None = None) -> bool:
    """Whether f^(p-1) compatibly splits the chart ideal of K(a) x K(a)."""
    if not is_kempf_vector(a, n):
        raise ValueError(f"{tuple(a)} is not a Kempf vector for n={n}")
    if op is None:
        from .diagonal import f_operator

        op = f_operator(n, p)
    vs = kempf_vars(a, doubled=True)
    if not vs:
        return True
    return compatibly_splits(op, Variables(op.ring, vs))


def _ideal_with(m_vars: set[Var], ring, h: Polynomial):
    if m_vars:
        return Sum([Variables(ring, m_vars), Principal(h)])
    return Principal(h)


def monideal_intersection_identity(m_vars: Iterable[Var], f: Polynomial, g: Polynomial,
                                   degree_bound: int | None = None) -> bool:
    """Bounded check of (M, f g) = (M, f) and (M, g) intersected.

    ``f`` and ``g`` must avoid the variables of M.  Forward inclusion is
    checked on generators.  For the reverse, every h = a f of degree at most
    ``degree_bound`` (default 2(deg f + deg g)) that lies in (M, g) is found
    by solving the linear system "remainder of a f modulo g is zero" modulo M,
    and each solution is tested for membership in (M, f g).
    """
    m_vars = set(m_vars)
    ring = f.ring
    if g.ring != ring:
        raise ValueError("f and g must share a ring")
    if (f.variables() | g.variables()) & m_vars:
        raise ValueError("f and g must avoid the monomial variables")
    left = _ideal_with(m_vars, ring, f * g)
    in_f = _ideal_with(m_vars, ring, f)
    in_g = _ideal_with(m_vars, ring, g)
    for v in m_vars:
        x = ring.gen(v)
        if not (in_f.contains(x) and in_g.contains(x)):
            return False
    fg = f * g
    if not (in_f.contains(fg) and in_g.contains(fg)):
        return False

    if degree_bound is None:
        degree_bound = 2 * (f.degree() + g.degree())
    free = [v for v in ring.variables if v not in m_vars]
    a_deg = degree_bound - f.degree()
    if a_deg < 0:
        return True
    idx = ring.indices(free)
    monos = []
    for tot in range(a_deg + 1):
        for combo in itertools.combinations_with_replacement(range(len(free)), tot):
            e = [0] * ring.nvars
            for c in combo:
                e[idx[c]] += 1
            monos.append(tuple(e))
    remainders = [ring.monomial(e).__mul__(f).divmod(g)[1] for e in monos]
    support = sorted({e for r in remainders for e in r.terms})
    pos = {e: k for k, e in enumerate(support)}
    rows = [[0] * len(monos) for _ in support]
    for col, r in enumerate(remainders):
        for e, c in r.terms.items():
            rows[pos[e]][col] = c
    for vec in nullspace_mod_p(rows, len(monos), ring.p) if rows else _unit_vectors(len(monos)):
        a = Polynomial(ring, {e: c for e, c in zip(monos, vec) if c})
        if not left.contains(a * f):
            return False
    return True


def _unit_vectors(k: int) -> list[list[int]]:
    return [[1 if j == i else 0 for j in range(k)] for i in range(k)]
