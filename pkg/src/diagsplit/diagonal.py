"""The matrices M(g, h), L(g, h), their corner submatrices L_i, and the section f.

Everything is restricted to the chart U- x U-: g and h are unipotent lower
triangular, so an entry of L is x_rc / y_rc below the diagonal, 1 on it and 0
above.  The chart ring lists the variables in the V-ordering
V_1, V_2, ..., V_{2n-1}, which is both the residual normal crossing order and
the lex tiebreak of the term order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import PolyRing, Polynomial, SymbolicMatrix, Var, X, Y
from .algebra.matrix import lower_left_minor
from .splitting import DiagonalPairing, SplittingOperator, vanishing_order_on_diagonal

Entry = Var | int


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank parameter n must be an integer >= 2, got {n!r}")


def _layout(n: int) -> list[list[Entry]]:
    """n x 2n layout of L with variables as Var and constants as ints."""
    rows = []
    for r in range(1, n + 1):
        row: list[Entry] = []
        for c in range(1, n + 1):
            if r > c:
                row += [X(r, c), Y(r, c)]
            elif r == c:
                row += [1, 1]
            else:
                row += [0, 0]
        rows.append(row)
    return rows


def _block(n: int, i: int) -> tuple[range, range]:
    """0-based rows and columns of L that form L_i."""
    if not 1 <= i <= 2 * n - 1:
        raise ValueError(f"index i={i} out of range 1..{2 * n - 1}")
    if i <= n:
        return range(n - i, n), range(i)
    k = i - n
    return range(k, n), range(2 * k, i)


def _diagonal_vars(n: int, i: int) -> list[Var]:
    lay = _layout(n)
    rows, cols = _block(n, i)
    return [lay[r][c] for r, c in zip(rows, cols) if isinstance(lay[r][c], Var)]


@lru_cache(maxsize=None)
def v_ordering(n: int) -> tuple[Var, ...]:
    _check_n(n)
    return tuple(v for i in range(1, 2 * n) for v in _diagonal_vars(n, i))


@lru_cache(maxsize=None)
def chart_ring(n: int, p: int) -> PolyRing:
    """F_p[U- x U-] with the V-ordering as table order."""
    return PolyRing(p, v_ordering(n))


@lru_cache(maxsize=None)
def x_ring(n: int, p: int) -> PolyRing:
    """F_p[U-] for a single copy, x-variables in V-order."""
    return PolyRing(p, [v for v in v_ordering(n) if v.kind == "x"])


@lru_cache(maxsize=None)
def chart_pairing(n: int, p: int) -> DiagonalPairing:
    return DiagonalPairing(chart_ring(n, p))


def _realize(ring: PolyRing, lay: list[list[Entry]]) -> SymbolicMatrix:
    return SymbolicMatrix(ring, [[ring.gen(a) if isinstance(a, Var) else a for a in row] for row in lay])


def build_L(n: int, p: int) -> SymbolicMatrix:
    _check_n(n)
    return _realize(chart_ring(n, p), _layout(n))


def build_M(n: int, p: int) -> SymbolicMatrix:
    """2n x 2n: g's rows in reverse order with zero y-columns, above L-style rows of (g, h)."""
    _check_n(n)

    def g_entry(r: int, c: int) -> Entry:
        return X(r, c) if r > c else (1 if r == c else 0)

    top = [[a for c in range(1, n + 1) for a in (g_entry(r, c), 0)] for r in range(n, 0, -1)]
    return _realize(chart_ring(n, p), top + _layout(n))


def submatrix_L_i(n: int, i: int, p: int) -> SymbolicMatrix:
    _check_n(n)
    rows, cols = _block(n, i)
    return build_L(n, p).submatrix(rows, cols)


def mu(n: int, i: int) -> int:
    return min(i // 2, (2 * n - i) // 2)


def identical_column_pairs(n: int, i: int) -> int:
    """Adjacent (x-column, y-column) pairs of L_i that agree after y -> x."""
    lay = _layout(n)
    rows, cols = _block(n, i)
    cols = list(cols)
    count = 0
    for a, b in zip(cols, cols[1:]):
        if a % 2:
            continue
        xs = [lay[r][a] for r in rows]
        ys = [lay[r][b] for r in rows]
        twin = [Var("x", e.i, e.j) if isinstance(e, Var) else e for e in ys]
        if xs == twin:
            count += 1
    return count


@dataclass(frozen=True)
class DiagonalData:
    n: int
    p: int
    L: tuple[SymbolicMatrix, ...]
    V: tuple[tuple[Var, ...], ...]
    m: tuple[Polynomial, ...]
    mu: tuple[int, ...]

    def ordering(self) -> list[Var]:
        return [v for vs in self.V for v in vs]


class ConstructionError(AssertionError):
    pass


def diagonal_data(n: int, p: int) -> DiagonalData:
    _check_n(n)
    ring = chart_ring(n, p)
    Ls, Vs, ms, mus = [], [], [], []
    for i in range(1, 2 * n):
        Li = submatrix_L_i(n, i, p)
        vs = tuple(_diagonal_vars(n, i))
        mono = ring.one
        for v in vs:
            mono = mono * ring.gen(v)
        Ls.append(Li)
        Vs.append(vs)
        ms.append(mono)
        mus.append(mu(n, i))
    seen = [v for vs in Vs for v in vs]
    expected = {X(r, c) for r in range(2, n + 1) for c in range(1, r)}
    expected |= {Y(r, c) for r in range(2, n + 1) for c in range(1, r)}
    if len(seen) != len(set(seen)) or set(seen) != expected:
        raise ConstructionError("V_i do not partition the chart variables")
    if sum(mus) != n * (n - 1) // 2:
        raise ConstructionError("sum of mu(i) differs from n(n-1)/2")
    for i, Li in enumerate(Ls, start=1):
        diag = [a for a in Li.diagonal() if not a.is_constant()]
        if [next(iter(a.variables())) for a in diag] != list(Vs[i - 1]):
            raise ConstructionError(f"V_{i} is not the non-constant diagonal of L_{i}")
    return DiagonalData(n, p, tuple(Ls), tuple(Vs), tuple(ms), tuple(mus))


def determinant_factors(n: int, p: int) -> list[Polynomial]:
    return [submatrix_L_i(n, i, p).determinant() for i in range(1, 2 * n)]


def f_factors(n: int, p: int) -> list[Polynomial]:
    """The non-constant det L_i, each scaled so that m_i has coefficient 1."""
    _check_n(n)
    data = diagonal_data(n, p)
    out = []
    for det, mono in zip(determinant_factors(n, p), data.m):
        lead = det.coefficient(next(iter(mono.terms)))
        if lead == 0:
            raise ConstructionError("m_i does not occur in det L_i")
        if lead != 1:
            det = det.scale(data.L[0].ring.char.inverse(lead))
        if not det.is_constant():
            out.append(det)
    return out


def f_section(n: int, p: int) -> Polynomial:
    """Product of det L_i, scaled so that the monomial of all chart variables has coefficient 1."""
    ring = chart_ring(n, p)
    f = ring.one
    for d in f_factors(n, p):
        f = f * d
    if f.coefficient(tuple([1] * ring.nvars)) != 1:
        raise ConstructionError("product of the m_i does not occur in f with coefficient 1")
    return f


def f_operator(n: int, p: int) -> SplittingOperator:
    """The operator of f^(p-1), remembering the factorisation for cheap shifting."""
    return SplittingOperator.from_rnc(f_factors(n, p))


def check_delta_identity(n: int, i: int, p: int) -> tuple[bool, int]:
    """Compare the corner minor of M with det L_i; returns (verdict, sign)."""
    M = build_M(n, p)
    lhs = lower_left_minor(M, i)
    rhs = submatrix_L_i(n, i, p).determinant()
    if lhs == rhs:
        return True, 1
    if lhs == -rhs:
        return True, -1
    return False, 0


def check_congruence(n: int, i: int, p: int) -> bool:
    """det L_i reduced modulo M_1 + ... + M_{i-1} equals m_i."""
    data = diagonal_data(n, p)
    earlier = [v for vs in data.V[: i - 1] for v in vs]
    rem = data.L[i - 1].determinant().set_zero(earlier)
    return rem == data.m[i - 1]


def anticanonical_naive(n: int, p: int, ring: PolyRing | None = None, kind: str = "x") -> Polynomial:
    """Product of the corner minors delta_1 .. delta_{n-1} of a unipotent lower triangular matrix."""
    _check_n(n)
    ring = ring or x_ring(n, p)

    def entry(r: int, c: int) -> Polynomial | int:
        return ring.gen(Var(kind, r, c)) if r > c else (1 if r == c else 0)

    u = SymbolicMatrix(ring, [[entry(r, c) for c in range(1, n + 1)] for r in range(1, n + 1)])
    f = ring.one
    for i in range(1, n):
        f = f * lower_left_minor(u, i)
    return f


def naive_diagonal_product(n: int, p: int) -> Polynomial:
    """The naive section on each factor, multiplied: a splitting that is not maximal on the diagonal."""
    ring = chart_ring(n, p)
    return anticanonical_naive(n, p, ring, "x") * anticanonical_naive(n, p, ring, "y")


def diagonal_order(f: Polynomial, n: int, p: int) -> int | float:
    return vanishing_order_on_diagonal(f, chart_pairing(n, p))


def v_table_latex(data: DiagonalData) -> str:
    lines = []
    for i, vs in enumerate(data.V, start=1):
        body = r"\{" + ", ".join(v.latex for v in vs) + r"\}" if vs else r"\emptyset"
        lines.append(f"V_{i} &= {body}")
    return "\\\\\n".join(lines)
