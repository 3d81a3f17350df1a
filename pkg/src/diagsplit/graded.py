"""Graded splittings, the t-extension of a splitting, and Rees-algebra checks."""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass
from math import comb

from .algebra import Polynomial, T, Var, is_prime
from .splitting import (
    DiagonalPairing,
    MaximalityResult,
    SplittingOperator,
    _diagonal_power_witness,
    _z_positions,
    _all_monomials,
    default_degree_bound,
    is_maximally_split_diagonal,
    require_splitting,
)


def _binom(m: int, k: int) -> int:
    return comb(m, k) if m >= k >= 0 else 0


@dataclass(frozen=True)
class EllRanks:
    n: int
    p: int
    ranks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(self.ranks))

    @property
    def total(self) -> int:
        return sum(self.ranks)

    def recursion_holds(self) -> bool:
        n, p = self.n, self.p
        return all(
            self.ranks[j] == _binom(j * p + n, n) - sum(_binom(i + n, n) * self.ranks[j - i] for i in range(1, j + 1))
            for j in range(len(self.ranks))
        )

    def to_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "ranks": list(self.ranks)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str | dict) -> EllRanks:
        data = json.loads(text) if isinstance(text, str) else text
        return cls(int(data["n"]), int(data["p"]), tuple(int(x) for x in data["ranks"]))


def ell_ranks(n: int, p: int) -> EllRanks:
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    ranks: list[int] = []
    for j in range(n + 1):
        val = _binom(j * p + n, n) - sum(_binom(i + n, n) * ranks[j - i] for i in range(1, j + 1))
        if val < 0:
            raise ArithmeticError(f"negative rank l_{j} = {val} for n={n}, p={p}")
        ranks.append(val)
    return EllRanks(n, p, tuple(ranks))


def check_graded_dimension_identity(n: int, p: int, d_max: int) -> bool:
    """sum_j l_j C(d-j+n, n) == C(dp+n, n) for every 0 <= d <= d_max."""
    ranks = ell_ranks(n, p).ranks
    for d in range(d_max + 1):
        lhs = sum(l * _binom(d - j + n, n) for j, l in enumerate(ranks))
        if lhs != _binom(d * p + n, n):
            return False
    return True


def sigma_degree_zero(op: SplittingOperator, m: Polynomial) -> Polynomial:
    """Degree-0 part of a graded splitting: S_d -> S_(d/p), and 0 when p does not divide d."""
    if not m.is_homogeneous():
        raise ValueError("sigma_0 needs a homogeneous input")
    s = op.section
    N = op.ring.nvars
    if not s.is_homogeneous() or s.degree() != (op.p - 1) * N:
        raise ValueError(f"section must be homogeneous of degree (p-1)*{N}")
    if m.is_zero():
        return m
    d = m.degree()
    if d % op.p:
        return op.ring.zero
    out = op.apply(m)
    if not out.is_homogeneous() or (out and out.degree() != d // op.p):
        raise AssertionError("sigma_0 broke the grading")
    return out


def sigma_t_apply(op: SplittingOperator, g: Polynomial) -> Polynomial:
    """sigma[t](a_0 + a_1 t + ...) = sigma(a_0) + sigma(a_p) t + sigma(a_2p) t^2 + ..."""
    base = op.ring
    ext = base.extend([T])
    if g.ring != ext:
        if g.ring == base:
            g = Polynomial(ext, {e + (0,): c for e, c in g.terms.items()}, normalized=True)
        else:
            raise ValueError("g must live in the operator ring extended by T")
    tpos = ext.index[T]
    p = op.p
    coeffs: dict[int, dict] = {}
    for e, c in g.terms.items():
        k = e[tpos]
        if k % p:
            continue
        coeffs.setdefault(k // p, {})[e[:tpos] + e[tpos + 1:]] = c
    out = ext.zero
    for i, terms in sorted(coeffs.items()):
        a = op.apply(Polynomial(base, terms, normalized=True))
        out = out + Polynomial(ext, {e[:tpos] + (i,) + e[tpos:]: c for e, c in a.terms.items()}, normalized=True)
    return out


@dataclass(frozen=True)
class ReesResult:
    holds: bool
    witness: str | None = None
    reason: str | None = None


def rees_compatibility_search(op: SplittingOperator, pairing: DiagonalPairing, d: int, m_max: int,
                              deg_bound: int | None = None) -> ReesResult:
    """sigma(I^(pm)) in I^m and sigma(I^(pm+1)) in I^(m+1) for m <= m_max.

    These are the conditions under which sigma[t] preserves the Rees algebra
    of I and its exceptional ideal.  A non-maximal section fails with a
    witness instead of raising, so that negative controls report cleanly.
    """
    require_splitting(op)
    if d != len(pairing):
        raise ValueError(f"codimension {d} does not match the {len(pairing)} diagonal pairs")
    if not is_maximally_split_diagonal(op, pairing, d):
        reason = "diagonal not maximally split"
    else:
        reason = None
    p = op.p
    for m in range(m_max + 1):
        for src, tgt in ((p * m, m), (p * m + 1, m + 1)):
            if deg_bound is not None and src > deg_bound:
                continue
            w = _diagonal_power_witness(op, pairing, src, tgt)
            if w is not None:
                return ReesResult(False, str(pairing.unshift(pairing.shifted_ring.parse(w))),
                                  reason or f"sigma(I^{src}) not in I^{tgt}")
    if reason:
        raise AssertionError("non-maximal section passed every Rees condition")
    return ReesResult(True)


def rees_compatibility_check(op: SplittingOperator, pairing: DiagonalPairing, d: int, m_max: int,
                             deg_bound: int | None = None) -> bool:
    return rees_compatibility_search(op, pairing, d, m_max, deg_bound).holds


def induced_maximality_search(op: SplittingOperator, pairing: DiagonalPairing, killed: Iterable[Var],
                              m_max: int, deg_bound: int | None = None) -> MaximalityResult:
    """Maximality of the splitting induced on R/Z along the image of the diagonal.

    ``killed`` are the variables generating Z; each must be killed with its
    partner so that the diagonal restricts to the surviving pairs.  Tests
    every monomial z^gamma x^w outside Z with mp+1 <= |gamma| <= deg_bound.
    """
    killed = set(killed)
    for x, y in zip(pairing.xvars, pairing.yvars):
        if (x in killed) != (y in killed):
            raise ValueError("Z must contain a variable together with its partner")
    require_splitting(op)
    if deg_bound is None:
        deg_bound = default_degree_bound(op, m_max)
    sr = pairing.shifted_ring
    sop = op.shifted(pairing)
    y_to_z = dict(zip(pairing.yvars, pairing.zvars))
    dead = [y_to_z.get(v, v) for v in killed]
    dead_pos = set(sr.indices(dead))
    live_z = [q for q in _z_positions(pairing) if q not in dead_pos]
    live_zvars = [sr.variables[q] for q in live_z]
    tested = 0
    for m in range(m_max + 1):
        for g in _all_monomials(sr, _z_positions(pairing), m * op.p + 1, deg_bound, op.p):
            e = next(iter(g.terms))
            if any(e[q] for q in dead_pos):
                continue
            tested += 1
            out = sop.apply(g).set_zero(dead)
            if out.min_degree_in(live_zvars) < m + 1:
                return MaximalityResult(False, witness=str(pairing.unshift(g)), m=m, tested=tested)
    return MaximalityResult(True, tested=tested)
