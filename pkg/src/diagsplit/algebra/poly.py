"""Sparse multivariate polynomials over F_p.

A :class:`PolyRing` fixes the characteristic and an ordered variable table.
Polynomials store a dict mapping dense exponent tuples (one slot per table
entry) to nonzero coefficients in ``0..p-1``.  Lexicographic order with the
table order as descending significance coincides with Python tuple order,
which is what the division routine and the printer rely on.
"""

from __future__ import annotations

import heapq
import math
import re
from collections.abc import Iterable, Mapping
from typing import Union

from .field import Characteristic
from .variables import Var, parse_var

Exponent = tuple[int, ...]


class IncompatibleContext(ValueError):
    """Operands live in different rings (table or characteristic differ)."""

    def __init__(self, msg: str = "incompatible context"):
        super().__init__(msg)


class PolyRing:
    """F_p[v_1, ..., v_N] with an explicit variable order."""

    def __init__(self, p: int | Characteristic, variables: Iterable[Var | str]):
        self.char = p if isinstance(p, Characteristic) else Characteristic(p)
        self.p = self.char.p
        vs = tuple(v if isinstance(v, Var) else parse_var(v) for v in variables)
        if len(set(vs)) != len(vs):
            raise ValueError("variable table contains duplicates")
        self.variables = vs
        self.index = {v: k for k, v in enumerate(vs)}
        self.nvars = len(vs)
        self._key = (self.p, vs)
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return self is other or (isinstance(other, PolyRing) and self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        names = ", ".join(v.short for v in self.variables)
        return f"PolyRing(F_{self.p}[{names}])"

    def __contains__(self, v):
        return v in self.index

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {}, normalized=True)

    @property
    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c: int) -> Polynomial:
        return Polynomial(self, {self._zero_exp: c})

    def gen(self, v: Var | str) -> Polynomial:
        v = v if isinstance(v, Var) else parse_var(v)
        if v not in self.index:
            raise KeyError(f"variable {v} not in table")
        e = [0] * self.nvars
        e[self.index[v]] = 1
        return Polynomial(self, {tuple(e): 1}, normalized=True)

    def gens(self) -> list[Polynomial]:
        return [self.gen(v) for v in self.variables]

    def exponent(self, powers: Mapping[Var, int]) -> Exponent:
        e = [0] * self.nvars
        for v, k in powers.items():
            if k < 0:
                raise ValueError("negative exponent")
            e[self.index[v]] += k
        return tuple(e)

    def monomial(self, powers: Mapping[Var, int] | Exponent, coeff: int = 1) -> Polynomial:
        e = powers if isinstance(powers, tuple) else self.exponent(powers)
        if len(e) != self.nvars:
            raise ValueError("exponent length does not match the table")
        return Polynomial(self, {e: coeff})

    def indices(self, vs: Iterable[Var]) -> list[int]:
        return [self.index[v] for v in vs]

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(self, text)

    def extend(self, extra: Iterable[Var]) -> PolyRing:
        extra = [v for v in extra if v not in self.index]
        return PolyRing(self.char, self.variables + tuple(extra))


Coercible = Union["Polynomial", int]


class Polynomial:
    """An element of a :class:`PolyRing`; treat instances as immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponent, int], normalized: bool = False):
        self.ring = ring
        if normalized:
            self.terms = terms if isinstance(terms, dict) else dict(terms)
        else:
            p = ring.p
            self.terms = {e: c % p for e, c in terms.items() if c % p}
        self._hash = None

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other: Coercible) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise IncompatibleContext()
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Coercible) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = (out.get(e, 0) + c) % p
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out, normalized=True)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        p = self.ring.p
        return Polynomial(self.ring, {e: p - c for e, c in self.terms.items()}, normalized=True)

    def __sub__(self, other: Coercible) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Coercible) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Coercible) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponent, int] = {}
        get = out.get
        for eb, cb in b.items():
            if not any(eb):
                for ea, ca in a.items():
                    out[ea] = get(ea, 0) + ca * cb
                continue
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
        return Polynomial(self.ring, {e: c % p for e, c in out.items() if c % p}, normalized=True)

    __rmul__ = __mul__

    def scale(self, c: int) -> Polynomial:
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exp: Exponent, coeff: int = 1) -> Polynomial:
        p = self.ring.p
        return Polynomial(
            self.ring,
            {tuple([x + y for x, y in zip(e, exp)]): c * coeff % p for e, c in self.terms.items()},
            normalized=coeff % p == 1,
        )

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> int:
        """The constant coefficient."""
        return self.terms.get(self.ring._zero_exp, 0)

    def coefficient(self, exp: Exponent | Mapping[Var, int]) -> int:
        if not isinstance(exp, tuple):
            exp = self.ring.exponent(exp)
        return self.terms.get(exp, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def min_degree_in(self, vs: Iterable[Var]) -> int | float:
        """Minimum over terms of the total exponent in ``vs``; ``inf`` for 0."""
        idx = self.ring.indices(vs)
        if not self.terms:
            return math.inf
        return min(sum(e[k] for k in idx) for e in self.terms)

    def variables(self) -> set[Var]:
        used: set[Var] = set()
        for e in self.terms:
            used.update(self.ring.variables[k] for k, x in enumerate(e) if x)
        return used

    def leading_term(self) -> tuple[Exponent, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    # -- homomorphisms ------------------------------------------------------

    def substitute(self, mapping: Mapping[Var, Polynomial], target: PolyRing | None = None) -> Polynomial:
        """Apply the ring homomorphism sending each mapped variable to its image.

        Unmapped variables go to themselves in the target ring, which is the
        common ring of the images (or this ring when the map is empty).
        """
        rings = {img.ring for img in mapping.values()}
        if target is None:
            if len(rings) > 1:
                raise IncompatibleContext("substitution images live in different rings")
            target = rings.pop() if rings else self.ring
        elif any(r != target for r in rings):
            raise IncompatibleContext("substitution images do not share the target table")
        if target.p != self.ring.p:
            raise IncompatibleContext()
        images: list[Polynomial | None] = []
        for v in self.ring.variables:
            if v in mapping:
                images.append(mapping[v])
            elif v in target.index:
                images.append(target.gen(v))
            else:
                images.append(None)
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(k: int, x: int) -> Polynomial:
            key = (k, x)
            if key not in powers:
                powers[key] = images[k] if x == 1 else power(k, x - 1) * images[k]
            return powers[key]

        acc: dict[Exponent, int] = {}
        p = target.p
        for e, c in self.terms.items():
            term = target.const(c)
            for k, x in enumerate(e):
                if not x:
                    continue
                if images[k] is None:
                    raise KeyError(f"variable {self.ring.variables[k]} is unmapped and absent from the target table")
                term = term * power(k, x)
            for te, tc in term.terms.items():
                acc[te] = (acc.get(te, 0) + tc) % p
        return Polynomial(target, acc)

    def set_zero(self, vs: Iterable[Var]) -> Polynomial:
        """Image under v -> 0 for every v in ``vs`` (drops terms containing them)."""
        idx = self.ring.indices(vs)
        return Polynomial(
            self.ring,
            {e: c for e, c in self.terms.items() if not any(e[k] for k in idx)},
            normalized=True,
        )

    def frobenius(self) -> Polynomial:
        """f^p, computed as exponent scaling (c^p = c in F_p)."""
        p = self.ring.p
        return Polynomial(self.ring, {tuple(x * p for x in e): c for e, c in self.terms.items()}, normalized=True)

    # -- division -----------------------------------------------------------

    def divmod(self, h: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Multivariate division by a single polynomial under lex order.

        A single polynomial is a Groebner basis of the ideal it generates, so
        the remainder is the unique normal form and is zero iff ``h`` divides.
        """
        h = self._coerce(h)
        if h.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ring, p = self.ring, self.ring.p
        lt, lc = h.leading_term()
        inv = ring.char.inverse(lc)
        rest = [(e, c) for e, c in h.terms.items() if e != lt]
        work = dict(self.terms)
        heap = [tuple(-x for x in e) for e in work]
        heapq.heapify(heap)
        quot: dict[Exponent, int] = {}
        rem: dict[Exponent, int] = {}
        while heap:
            e = tuple(-x for x in heapq.heappop(heap))
            c = work.pop(e, 0)
            if not c:
                continue
            if all(a >= b for a, b in zip(e, lt)):
                qe = tuple(a - b for a, b in zip(e, lt))
                qc = c * inv % p
                quot[qe] = (quot.get(qe, 0) + qc) % p
                for he, hc in rest:
                    ne = tuple(a + b for a, b in zip(qe, he))
                    old = work.get(ne)
                    nc = ((old or 0) - qc * hc) % p
                    if nc:
                        work[ne] = nc
                        if old is None:
                            heapq.heappush(heap, tuple(-x for x in ne))
                    elif old is not None:
                        del work[ne]
            else:
                rem[e] = c
        return Polynomial(ring, quot), Polynomial(ring, rem, normalized=True)

    def exact_divide(self, h: Polynomial) -> Polynomial | None:
        """Return q with self == h*q, or None when h does not divide."""
        q, r = self.divmod(h)
        return q if r.is_zero() else None

    # -- text ---------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        names = [str(v) for v in self.ring.variables]
        parts = []
        for e, c in self.sorted_terms():
            factors = [n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x]
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


_TOKEN_RE = re.compile(r"\s*([+\-])?\s*([^+\-]+)")
_FACTOR_RE = re.compile(r"([xyz]\[\d+\]\[\d+\]|v\[\d+\]|t)(?:\^(\d+))?|(\d+)")


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse the ``coeff*var^exp*... + ...`` grammar (``-`` accepted as a convenience)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    acc: dict[Exponent, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or (m.group(1) is None and not first):
            raise ValueError(f"malformed polynomial text near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        e = [0] * ring.nvars
        coeff = sign
        for raw in m.group(2).split("*"):
            raw = raw.strip()
            fm = _FACTOR_RE.fullmatch(raw)
            if fm is None:
                raise ValueError(f"malformed factor {raw!r}")
            if fm.group(3) is not None:
                coeff *= int(fm.group(3))
                continue
            v = parse_var(fm.group(1))
            if v not in ring.index:
                raise KeyError(f"variable {v} not in table")
            e[ring.index[v]] += int(fm.group(2) or 1)
        te = tuple(e)
        acc[te] = acc.get(te, 0) + coeff
        pos = m.end()
        first = False
    return Polynomial(ring, acc)
