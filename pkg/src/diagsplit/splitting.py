"""The duality operator attached to a section, and compatibility decisions.

A section ``s`` (a polynomial in the chart coordinates, standing for
``s * (1/dx)^(p-1)``) acts on polynomials by

    x^beta  |->  sum over terms c x^alpha of s with alpha + beta = p - 1 (mod p)
                 of  c * x^((alpha + beta + 1)/p - 1)

and every other term is discarded.  The map is p-linear:
``apply(h^p * g) == h * apply(g)``.  All finite compatibility criteria below
follow from that identity: an ideal that is a module over the p-th powers is
compatibly split iff its module generators are sent back into it, and within
one residue class of exponents distinct section terms produce distinct output
monomials, so no cancellation can hide a violation.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from .algebra import IncompatibleContext, Polynomial, PolyRing, Var, Z, partner
from .algebra.poly import Exponent

PRINCIPAL_ENUMERATION_LIMIT = 2**20
PRINCIPAL_SAMPLES = 10_000


class UndecidableSpec(ValueError):
    def __init__(self, msg: str = "undecidable spec"):
        super().__init__(msg)


class NotASplitting(ValueError):
    pass


# ---------------------------------------------------------------------------
# diagonal coordinates


class DiagonalPairing:
    """Pairs (x_ij, y_ij) of a chart ring and the shift y -> x + z.

    The shifted ring has the same table as ``ring`` with each paired y
    replaced in place by z_ij, so the volume form dx ^ dy equals dx ^ dz and a
    splitting operator can be transported verbatim.
    """

    def __init__(self, ring: PolyRing, pairs: Iterable[tuple[Var, Var]] | None = None):
        if pairs is None:
            pairs = [(v, partner(v)) for v in ring.variables if v.kind == "x" and partner(v) in ring]
        pairs = list(pairs)
        for x, y in pairs:
            if x.kind != "x" or y != partner(x):
                raise ValueError(f"({x}, {y}) is not an x/y diagonal pair")
            if x not in ring or y not in ring:
                raise ValueError(f"pair ({x}, {y}) not present in the table")
        self.ring = ring
        self.pairs = pairs
        self.xvars = [x for x, _ in pairs]
        self.yvars = [y for _, y in pairs]
        self.zvars = [Z(x.i, x.j) for x in self.xvars]
        to_z = dict(zip(self.yvars, self.zvars))
        self.shifted_ring = PolyRing(ring.char, [to_z.get(v, v) for v in ring.variables])

    def __len__(self):
        return len(self.pairs)

    def shift(self, f: Polynomial) -> Polynomial:
        """Rewrite f in the coordinates (x, z) with y = x + z."""
        if f.ring != self.ring:
            raise IncompatibleContext()
        sr = self.shifted_ring
        images = {y: sr.gen(x) + sr.gen(z) for x, y, z in zip(self.xvars, self.yvars, self.zvars)}
        return f.substitute(images, target=sr)

    def unshift(self, g: Polynomial) -> Polynomial:
        if g.ring != self.shifted_ring:
            raise IncompatibleContext()
        r = self.ring
        images = {z: r.gen(y) - r.gen(x) for x, y, z in zip(self.xvars, self.yvars, self.zvars)}
        return g.substitute(images, target=r)

    def z_order(self, shifted: Polynomial) -> int | float:
        return shifted.min_degree_in(self.zvars)


# ---------------------------------------------------------------------------
# the operator


class SplittingOperator:
    """The p-linear map induced by a nonzero section polynomial."""

    def __init__(self, section: Polynomial, *, factors: Sequence[tuple[Polynomial, int]] | None = None):
        if section.is_zero():
            raise ValueError("section must be nonzero")
        self.section = section
        self.ring = section.ring
        self.p = section.ring.p
        # section == prod(base ** mult); shifting works factor by factor.
        self.factors = list(factors) if factors is not None else None
        self._shifted: dict[int, tuple[DiagonalPairing, SplittingOperator]] = {}

    @classmethod
    def power_of(cls, f: Polynomial, e: int) -> SplittingOperator:
        return cls(f**e, factors=[(f, e)])

    @classmethod
    def from_factors(cls, factors: Sequence[tuple[Polynomial, int]]) -> SplittingOperator:
        ring = factors[0][0].ring
        s = ring.one
        for b, k in factors:
            s = s * b**k
        return cls(s, factors=factors)

    @classmethod
    def from_rnc(cls, f: Polynomial | Sequence[Polynomial]) -> SplittingOperator:
        """The operator of f^(p-1); ``f`` may be given as a list of factors."""
        fs = [f] if isinstance(f, Polynomial) else list(f)
        p = fs[0].ring.p
        return cls.from_factors([(b, p - 1) for b in fs])

    def __repr__(self):
        return f"SplittingOperator(p={self.p}, terms={len(self.section)})"

    @cached_property
    def classes(self) -> dict[Exponent, list[tuple[Exponent, int]]]:
        """Section terms bucketed by exponent residue mod p."""
        p = self.p
        out: dict[Exponent, list[tuple[Exponent, int]]] = {}
        for e, c in self.section.terms.items():
            out.setdefault(tuple(x % p for x in e), []).append((e, c))
        return out

    def partner_class(self, exp: Exponent) -> list[tuple[Exponent, int]]:
        """Section terms that combine with x^exp into the residue class p-1."""
        p = self.p
        return self.classes.get(tuple((p - 1 - x) % p for x in exp), [])

    def apply(self, g: Polynomial) -> Polynomial:
        if g.ring != self.ring:
            raise IncompatibleContext()
        p = self.p
        pm1 = p - 1
        acc: dict[Exponent, int] = {}
        for e, c in g.terms.items():
            for se, sc in self.partner_class(e):
                out = tuple([(a + b - pm1) // p for a, b in zip(se, e)])
                acc[out] = acc.get(out, 0) + c * sc
        return Polynomial(self.ring, acc)

    __call__ = apply

    def shifted(self, pairing: DiagonalPairing) -> SplittingOperator:
        """The same operator written in the (x, z) coordinates of ``pairing``."""
        key = id(pairing)
        if key not in self._shifted:
            if pairing.ring != self.ring:
                raise IncompatibleContext()
            if self.factors is not None:
                op = SplittingOperator.from_factors([(pairing.shift(b), k) for b, k in self.factors])
            else:
                op = SplittingOperator(pairing.shift(self.section))
            self._shifted[key] = (pairing, op)
        return self._shifted[key][1]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "variables": [str(v) for v in self.ring.variables],
            "section": str(self.section),
        }

    @classmethod
    def from_dict(cls, data: dict) -> SplittingOperator:
        from .algebra import parse_var

        if "variables" in data:
            variables = [parse_var(v) for v in data["variables"]]
        else:
            variables = _variables_in_text([data["section"]])
        ring = PolyRing(int(data["p"]), variables)
        return cls(ring.parse(data["section"]))


def _variables_in_text(texts: Sequence[str]) -> list[Var]:
    import re

    from .algebra import parse_var
    from .algebra.variables import canonical_sort_key

    found = set()
    for t in texts:
        for m in re.finditer(r"[xyz]\[\d+\]\[\d+\]|v\[\d+\]|t", t):
            found.add(parse_var(m.group(0)))
    return sorted(found, key=canonical_sort_key)


def apply(op: SplittingOperator, g: Polynomial) -> Polynomial:
    return op.apply(g)


def is_splitting(op: SplittingOperator) -> bool:
    """The chart-level condition apply(1) == 1."""
    return op.apply(op.ring.one) == op.ring.one


def normalize(op: SplittingOperator) -> tuple[SplittingOperator, int]:
    """Rescale so that apply(1) == 1 when apply(1) is a nonzero constant.

    Returns the (possibly) rescaled operator and the factor applied.
    """
    one = op.apply(op.ring.one)
    if not one.is_constant() or one.is_zero():
        return op, 1
    c = one.constant_value()
    if c == 1:
        return op, 1
    inv = op.ring.char.inverse(c)
    return SplittingOperator(op.section.scale(inv)), inv


def require_splitting(op: SplittingOperator) -> None:
    if not is_splitting(op):
        raise NotASplitting("operator does not satisfy apply(1) == 1")


# ---------------------------------------------------------------------------
# ideals


class IdealSpec:
    ring: PolyRing

    def contains(self, f: Polynomial) -> bool:
        raise NotImplementedError

    def _check_ring(self, f: Polynomial) -> None:
        if f.ring != self.ring:
            raise IncompatibleContext()


class Variables(IdealSpec):
    """Ideal generated by a nonempty set of variables."""

    def __init__(self, ring: PolyRing, variables: Iterable[Var]):
        vs = frozenset(variables)
        if not vs:
            raise ValueError("Variables ideal needs at least one variable")
        missing = [v for v in vs if v not in ring]
        if missing:
            raise ValueError(f"variables {missing} not in table")
        self.ring = ring
        self.variables = vs
        self._idx = ring.indices(sorted(vs, key=ring.index.__getitem__))

    def contains(self, f: Polynomial) -> bool:
        self._check_ring(f)
        idx = self._idx
        return all(any(e[k] for k in idx) for e in f.terms)

    def contains_exp(self, e: Exponent) -> bool:
        return any(e[k] for k in self._idx)

    def __repr__(self):
        names = sorted(v.short for v in self.variables)
        return f"Variables({', '.join(names)})"


class MonomialIdeal(IdealSpec):
    """Ideal generated by finitely many monomials."""

    def __init__(self, ring: PolyRing, generators: Iterable[Exponent | Polynomial]):
        gens = []
        for g in generators:
            if isinstance(g, Polynomial):
                if g.ring != ring or len(g) != 1:
                    raise ValueError("monomial generators must be single terms of the ring")
                g = next(iter(g.terms))
            gens.append(tuple(g))
        if not gens:
            raise ValueError("MonomialIdeal needs at least one generator")
        # drop redundant generators
        minimal = [g for g in set(gens) if not any(h != g and _divides(h, g) for h in set(gens))]
        self.ring = ring
        self.generators = sorted(minimal, reverse=True)

    @classmethod
    def intersection(cls, a: Variables | MonomialIdeal, b: Variables | MonomialIdeal) -> MonomialIdeal:
        """Generators lcm(u, w) over pairs of generators."""
        ga, gb = _monomial_generators(a), _monomial_generators(b)
        return cls(a.ring, [tuple(max(x, y) for x, y in zip(u, w)) for u in ga for w in gb])

    def contains_exp(self, e: Exponent) -> bool:
        return any(_divides(g, e) for g in self.generators)

    def contains(self, f: Polynomial) -> bool:
        self._check_ring(f)
        return all(self.contains_exp(e) for e in f.terms)

    def __repr__(self):
        return f"MonomialIdeal({' , '.join(str(self.ring.monomial(g)) for g in self.generators)})"


def _divides(u: Exponent, w: Exponent) -> bool:
    return all(a <= b for a, b in zip(u, w))


def _monomial_generators(ideal: Variables | MonomialIdeal) -> list[Exponent]:
    if isinstance(ideal, MonomialIdeal):
        return list(ideal.generators)
    ring = ideal.ring
    return [ring.exponent({v: 1}) for v in ideal.variables]


class Principal(IdealSpec):
    def __init__(self, h: Polynomial):
        if h.is_zero():
            raise ValueError("principal generator must be nonzero")
        self.ring = h.ring
        self.generator = h

    def contains(self, f: Polynomial) -> bool:
        self._check_ring(f)
        return f.exact_divide(self.generator) is not None

    def __repr__(self):
        return f"Principal({self.generator})"


class DiagonalPower(IdealSpec):
    """I_diag^m; f belongs iff its shift has z-order >= m."""

    def __init__(self, pairing: DiagonalPairing, m: int = 1):
        if m < 1:
            raise ValueError("diagonal power exponent must be >= 1")
        if not len(pairing):
            raise ValueError("diagonal power needs a nonempty pairing")
        self.ring = pairing.ring
        self.pairing = pairing
        self.m = m

    def contains(self, f: Polynomial) -> bool:
        self._check_ring(f)
        return self.pairing.z_order(self.pairing.shift(f)) >= self.m

    def __repr__(self):
        return f"DiagonalPower(pairs={len(self.pairing)}, m={self.m})"


class Sum(IdealSpec):
    """Sum of ideals in the supported normal form.

    Variables summands merge into one set S.  At most one further summand is
    allowed: a Principal ideal, a MonomialIdeal, or a DiagonalPower whose
    pairs are either both in S or both outside it.  Membership drops the terms
    lying in (S) and decides the remainder in the quotient by S.
    """

    def __init__(self, parts: Sequence[IdealSpec]):
        if not parts:
            raise ValueError("empty sum")
        ring = parts[0].ring
        svars: set[Var] = set()
        rest: list[IdealSpec] = []
        for part in parts:
            if part.ring != ring:
                raise IncompatibleContext()
            if isinstance(part, Sum):
                if part.variables:
                    svars |= part.variables.variables
                if part.other is not None:
                    rest.append(part.other)
            elif isinstance(part, Variables):
                svars |= part.variables
            else:
                rest.append(part)
        if len(rest) > 1:
            raise UndecidableSpec()
        other = rest[0] if rest else None
        if isinstance(other, DiagonalPower):
            for x, y in other.pairing.pairs:
                if (x in svars) != (y in svars):
                    raise UndecidableSpec()
        self.ring = ring
        self.variables = Variables(ring, svars) if svars else None
        self.other = other

    def contains(self, f: Polynomial) -> bool:
        self._check_ring(f)
        if self.variables is None:
            return self.other.contains(f) if self.other else f.is_zero()
        rem = f.set_zero(self.variables.variables)
        if rem.is_zero():
            return True
        other = self.other
        if other is None:
            return False
        if isinstance(other, Principal):
            h = other.generator.set_zero(self.variables.variables)
            return not h.is_zero() and rem.exact_divide(h) is not None
        if isinstance(other, MonomialIdeal):
            return all(other.contains_exp(e) for e in rem.terms)
        if isinstance(other, DiagonalPower):
            s = self.variables.variables
            pairing = other.pairing
            kept = [(x, y) for x, y in pairing.pairs if x not in s]
            if not kept:
                return False
            sub = DiagonalPairing(pairing.ring, kept)
            return sub.z_order(sub.shift(rem)) >= other.m
        raise UndecidableSpec()

    def simplified(self) -> IdealSpec:
        if self.other is None:
            return self.variables
        if self.variables is None:
            return self.other
        if isinstance(self.other, MonomialIdeal):
            return MonomialIdeal(self.ring, _monomial_generators(self.variables) + self.other.generators)
        return self

    def __repr__(self):
        return f"Sum({self.variables!r}, {self.other!r})"


# ---------------------------------------------------------------------------
# compatibility


@dataclass(frozen=True)
class Verdict:
    holds: bool
    exact: bool = True
    witness: str | None = None

    def __bool__(self):
        return self.holds


def residues(n: int, p: int) -> Iterator[Exponent]:
    return itertools.product(range(p), repeat=n)


def check_compatibility(op: SplittingOperator, ideal: IdealSpec, *, seed: int = 0,
                        limit: int = PRINCIPAL_ENUMERATION_LIMIT,
                        samples: int = PRINCIPAL_SAMPLES) -> Verdict:
    """Decide apply(I) within I, with a witness on failure."""
    require_splitting(op)
    if ideal.ring != op.ring:
        raise IncompatibleContext()
    if isinstance(ideal, Sum):
        ideal = ideal.simplified()
    if isinstance(ideal, Variables):
        return _variables_verdict(op, ideal)
    if isinstance(ideal, MonomialIdeal):
        return _monomial_verdict(op, ideal)
    if isinstance(ideal, Principal):
        return _principal_verdict(op, ideal, seed=seed, limit=limit, samples=samples)
    if isinstance(ideal, DiagonalPower):
        w = _diagonal_power_witness(op, ideal.pairing, ideal.m, ideal.m)
        return Verdict(w is None, witness=w)
    if isinstance(ideal, Sum):
        return _sum_verdict(op, ideal)
    raise UndecidableSpec()


def compatibly_splits(op: SplittingOperator, ideal: IdealSpec, **kw) -> bool:
    return check_compatibility(op, ideal, **kw).holds


def _variables_verdict(op: SplittingOperator, ideal: Variables) -> Verdict:
    p, pm1 = op.p, op.p - 1
    for se in op.section.terms:
        v = tuple((pm1 - x) % p for x in se)
        if ideal.contains_exp(v):
            out = tuple((a + b - pm1) // p for a, b in zip(se, v))
            if not ideal.contains_exp(out):
                return Verdict(False, witness=str(op.ring.monomial(v)))
    return Verdict(True)


def variables_verdict_by_enumeration(op: SplittingOperator, ideal: Variables) -> Verdict:
    """Residue enumeration: every x^v, v in [0, p-1]^N, lying in the ideal."""
    ring = op.ring
    for v in residues(ring.nvars, op.p):
        if ideal.contains_exp(v) and not ideal.contains(op.apply(ring.monomial(v))):
            return Verdict(False, witness=str(ring.monomial(v)))
    return Verdict(True)


def _monomial_verdict(op: SplittingOperator, ideal: MonomialIdeal) -> Verdict:
    # Module generators over the p-th powers: monomials of the ideal from which
    # no p*e_k can be removed while staying inside.  Only exponents up to the
    # largest generator exponent + p - 1 can occur in such a generator.
    p, pm1 = op.p, op.p - 1
    n = op.ring.nvars
    caps = [max(g[k] for g in ideal.generators) for k in range(n)]
    for se in op.section.terms:
        v = tuple((pm1 - x) % p for x in se)
        choices = [range(v[k], caps[k] + p, p) if caps[k] else (v[k],) for k in range(n)]
        for e in itertools.product(*choices):
            if not ideal.contains_exp(e):
                continue
            if any(e[k] >= p and ideal.contains_exp(e[:k] + (e[k] - p,) + e[k + 1:]) for k in range(n)):
                continue
            out = tuple((a + b - pm1) // p for a, b in zip(se, e))
            if not ideal.contains_exp(out):
                return Verdict(False, witness=str(op.ring.monomial(e)))
    return Verdict(True)


def _principal_verdict(op, ideal: Principal, *, seed, limit, samples) -> Verdict:
    ring, p = op.ring, op.p
    h = ideal.generator
    n = ring.nvars
    if p**n <= limit:
        candidates: Iterable[Exponent] = residues(n, p)
        exact = True
    else:
        rng = random.Random(seed)
        candidates = (tuple(rng.randrange(p) for _ in range(n)) for _ in range(samples))
        exact = False
    for v in candidates:
        out = op.apply(h.mul_monomial(v))
        if out.is_zero():
            continue
        if out.exact_divide(h) is None:
            return Verdict(False, exact=True, witness=str(ring.monomial(v)))
    return Verdict(True, exact=exact)


def _sum_verdict(op: SplittingOperator, ideal: Sum) -> Verdict:
    # Generators of S + J over the p-th powers: the residue monomials of (S)
    # and the module generators of J.
    ring = op.ring
    s = ideal.variables
    for v in residues(ring.nvars, op.p):
        if s.contains_exp(v) and not ideal.contains(op.apply(ring.monomial(v))):
            return Verdict(False, witness=str(ring.monomial(v)))
    other = ideal.other
    if isinstance(other, Principal):
        gens = (other.generator.mul_monomial(v) for v in residues(ring.nvars, op.p))
    elif isinstance(other, DiagonalPower):
        gens = (other.pairing.unshift(g) for g in diagonal_power_generators(other.pairing, other.m, op.p))
    else:
        raise UndecidableSpec()
    for g in gens:
        if not ideal.contains(op.apply(g)):
            return Verdict(False, witness=str(g))
    return Verdict(True)


# ---------------------------------------------------------------------------
# diagonal vanishing and maximality


def vanishing_order_on_diagonal(f: Polynomial, pairing: DiagonalPairing) -> int | float:
    if pairing.ring != f.ring:
        raise IncompatibleContext()
    return pairing.z_order(pairing.shift(f))


def section_vanishing_order(op: SplittingOperator, pairing: DiagonalPairing) -> int | float:
    return pairing.z_order(op.shifted(pairing).section)


def is_maximally_split_diagonal(op: SplittingOperator, pairing: DiagonalPairing, d: int) -> bool:
    """Vanishing order of the section on the diagonal equals d(p-1)."""
    require_splitting(op)
    if not len(pairing):
        return d == 0
    order = section_vanishing_order(op, pairing)
    bound = d * (op.p - 1)
    if order > bound:
        raise NotASplitting(f"impossible for a splitting: vanishing order {order} exceeds d(p-1) = {bound}")
    return order == bound


def default_degree_bound(op: SplittingOperator, m_max: int) -> int:
    return op.section.degree() + op.p * (m_max + 1) + 2


def _z_positions(pairing: DiagonalPairing) -> list[int]:
    return pairing.shifted_ring.indices(pairing.zvars)


def _minimal_lifts(sop: SplittingOperator, zpos: list[int], k: int) -> Iterator[Exponent]:
    """One monomial g per occupied residue class, of minimal z-degree >= k.

    For a fixed residue class the z-order of apply(g) grows with g's z-degree
    only through the p-th power factor, so the smallest admissible lift is
    the extremal test; x-parts beyond the residue only multiply the output by
    x-monomials and are irrelevant to membership in powers of (z).
    """
    p = sop.p
    for r in sop.classes:
        v = list((p - 1 - x) % p for x in r)
        zdeg = sum(v[k2] for k2 in zpos)
        extra = max(0, -(-(k - zdeg) // p))
        v[zpos[0]] += p * extra
        yield tuple(v)


def diagonal_power_generators(pairing: DiagonalPairing, k: int, p: int, zmax: int | None = None
                              ) -> Iterator[Polynomial]:
    """Module generators over p-th powers of (z)^k in the shifted ring.

    z-part: exponent vectors of total degree >= k from which no p can be
    subtracted in one slot without dropping below k; other slots: residues.
    """
    sr = pairing.shifted_ring
    zpos = _z_positions(pairing)
    zset = set(zpos)
    nz = len(zpos)
    top = k + p - 1
    if zmax is not None:
        top = min(top, zmax)
    others = [kk for kk in range(sr.nvars) if kk not in zset]
    zparts = []
    for gamma in itertools.product(range(top + 1), repeat=nz):
        tot = sum(gamma)
        if tot < k or tot > top:
            continue
        if any(g >= p and tot - p >= k for g in gamma):
            continue
        zparts.append(gamma)
    for gamma in zparts:
        for w in residues(len(others), p):
            e = [0] * sr.nvars
            for kk, g in zip(zpos, gamma):
                e[kk] = g
            for kk, x in zip(others, w):
                e[kk] = x
            yield sr.monomial(tuple(e))


def _diagonal_power_witness(op, pairing, source_power, target_power) -> str | None:
    """Witness g in (z)^source with apply(g) outside (z)^target, or None."""
    if not len(pairing):
        return None
    sop = op.shifted(pairing)
    zpos = _z_positions(pairing)
    sr = pairing.shifted_ring
    for e in _minimal_lifts(sop, zpos, source_power):
        g = sr.monomial(e)
        if pairing.z_order(sop.apply(g)) < target_power:
            return str(g)
    return None


@dataclass(frozen=True)
class MaximalityResult:
    holds: bool
    witness: str | None = None
    m: int | None = None
    tested: int = 0


def maximality_search(op: SplittingOperator, pairing: DiagonalPairing, d: int, m_max: int,
                      deg_bound: int | None = None, exhaustive: bool = False) -> MaximalityResult:
    """Directly test apply(I^(mp+1)) within I^(m+1) for m = 0..m_max.

    ``deg_bound`` caps the z-degree of the tested monomials.  The default mode
    tests the minimal lift of every occupied residue class; ``exhaustive``
    enumerates all monomials z^gamma x^w with mp+1 <= |gamma| <= deg_bound and
    w a residue vector (higher x-powers factor out by p-linearity).
    """
    require_splitting(op)
    if d != len(pairing):
        raise ValueError(f"codimension {d} does not match the {len(pairing)} diagonal pairs")
    if not len(pairing):
        return MaximalityResult(True)
    if deg_bound is None:
        deg_bound = default_degree_bound(op, m_max)
    p = op.p
    sop = op.shifted(pairing)
    sr = pairing.shifted_ring
    zpos = _z_positions(pairing)
    tested = 0
    for m in range(m_max + 1):
        k = m * p + 1
        if exhaustive:
            cands = _all_monomials(sr, zpos, k, deg_bound, p)
        else:
            cands = (sr.monomial(e) for e in _minimal_lifts(sop, zpos, k)
                     if sum(e[q] for q in zpos) <= deg_bound)
        for g in cands:
            tested += 1
            out = sop.apply(g)
            if pairing.z_order(out) < m + 1:
                return MaximalityResult(False, witness=str(pairing.unshift(g)), m=m, tested=tested)
    return MaximalityResult(True, tested=tested)


def maximality_operator_check(op: SplittingOperator, pairing: DiagonalPairing, d: int, m_max: int,
                              deg_bound: int | None = None, exhaustive: bool = False) -> bool:
    return maximality_search(op, pairing, d, m_max, deg_bound, exhaustive).holds


def _all_monomials(sr: PolyRing, zpos: list[int], lo: int, hi: int, p: int) -> Iterator[Polynomial]:
    zset = set(zpos)
    others = [k for k in range(sr.nvars) if k not in zset]
    for gamma in _compositions_between(len(zpos), lo, hi):
        for w in residues(len(others), p):
            e = [0] * sr.nvars
            for k, g in zip(zpos, gamma):
                e[k] = g
            for k, x in zip(others, w):
                e[k] = x
            yield sr.monomial(tuple(e))


def _compositions_between(n: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix: tuple[int, ...], left: int, slots: int):
        if slots == 0:
            if sum(prefix) >= lo:
                yield prefix
            return
        for x in range(left + 1):
            yield from rec(prefix + (x,), left - x, slots - 1)

    yield from rec((), hi, n)

