from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagsplit.algebra import (
    Characteristic,
    IncompatibleContext,
    PolyRing,
    SymbolicMatrix,
    V,
    Var,
    X,
    Y,
    Z,
    identity,
    is_prime,
    lower_left_minor,
    nullspace_mod_p,
    parse_var,
    partner,
)
from oracles import cofactor_determinant, random_polynomial

R5 = PolyRing(5, [X(3, 1), X(2, 1), Y(3, 1), Y(2, 1), X(3, 2), Y(3, 2)])
x31, x21, y31, y21, x32, y32 = R5.gens()


def test_primality():
    assert [q for q in range(40) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    assert is_prime(2**31 - 1)
    assert not is_prime(2**31 - 3)
    with pytest.raises(ValueError):
        Characteristic(4)
    with pytest.raises(ValueError):
        Characteristic(2**61 - 1)


def test_characteristic_inverse():
    c = Characteristic(7)
    assert all(c.reduce(a * c.inverse(a)) == 1 for a in range(1, 7))


def test_variables():
    assert str(X(3, 1)) == "x[3][1]" and X(3, 1).short == "x31" and X(3, 1).latex == "x_{31}"
    assert parse_var("y[4][2]") == Y(4, 2) and parse_var("v[3]") == V(3) and parse_var("t") == Var("t")
    assert partner(X(2, 1)) == Y(2, 1) and partner(Y(2, 1)) == X(2, 1)
    with pytest.raises(ValueError):
        X(1, 2)
    with pytest.raises(ValueError):
        Var("w")


def test_char2_square():
    R = PolyRing(2, [V(1)])
    (v,) = R.gens()
    assert (v + 1) * (v + 1) == v**2 + 1


def test_char3_cube():
    R = PolyRing(3, [V(1), V(2)])
    v1, v2 = R.gens()
    assert (v1 + v2) ** 3 == v1**3 + v2**3


def test_minus_one_is_four_at_p5():
    a = x21 * y31 + 4 * x31 * y21
    assert a == x21 * y31 - x31 * y21
    # lex order with x31 most significant
    assert str(a) == "4*x[3][1]*y[2][1] + x[2][1]*y[3][1]"


def test_incompatible_context():
    other = PolyRing(3, R5.variables)
    with pytest.raises(IncompatibleContext, match="incompatible context"):
        _ = x31 + other.gen(X(3, 1))
    with pytest.raises(IncompatibleContext):
        _ = x31 * PolyRing(5, [X(3, 1)]).gen(X(3, 1))


def test_text_roundtrip_format():
    f = R5.parse("4*x[3][1]*y[2][1] + x[2][1]*y[3][1]")
    assert f == x21 * y31 - x31 * y21
    assert R5.parse(str(f)) == f
    assert str(R5.zero) == "0" and str(R5.one) == "1"


def _shift_ring():
    return PolyRing(5, [X(3, 1), X(2, 1), Z(3, 1), Z(2, 1), X(3, 2), Z(3, 2)])


def test_substitute_shift():
    S = _shift_ring()
    img = {X(3, 1): S.gen(X(3, 1)), X(2, 1): S.gen(X(2, 1)), X(3, 2): S.gen(X(3, 2))}
    for v in (Y(3, 1), Y(2, 1), Y(3, 2)):
        img[v] = S.gen(Var("x", v.i, v.j)) + S.gen(Var("z", v.i, v.j))
    f = (x21 * y31 - x31 * y21).substitute(img, target=S)
    assert f == S.parse("x[2][1]*z[3][1] + 4*x[3][1]*z[2][1]")
    assert f.min_degree_in([Z(3, 1), Z(2, 1), Z(3, 2)]) == 1
    assert (y32 - x32).substitute(img, target=S) == S.gen(Z(3, 2))


def test_substitute_unmapped_missing_variable():
    S = _shift_ring()
    with pytest.raises(KeyError):
        y31.substitute({}, target=S)


def test_substitute_identity():
    R = PolyRing(3, [V(1)])
    (v,) = R.gens()
    assert v.substitute({V(1): v}) == v


def test_min_degree_conventions():
    assert R5.one.min_degree_in([X(3, 1)]) == 0
    assert R5.zero.min_degree_in([X(3, 1)]) == math.inf


def test_determinant_examples():
    R = R5
    m = SymbolicMatrix(R, [[x21, y21], [x31, y31]])
    assert m.determinant() == x21 * y31 - x31 * y21
    assert identity(R, 4).determinant() == R.one
    m3 = SymbolicMatrix(R, [[1, 1, 0], [x21, y21, 1], [x31, y31, x32]])
    assert m3.determinant() == y21 * x32 - y31 - x21 * x32 + x31
    with pytest.raises(ValueError):
        SymbolicMatrix(R, [[1, 2]]).determinant()


def test_lower_left_minor_examples():
    L = SymbolicMatrix(R5, [[1, 1, 0, 0, 0, 0], [x21, y21, 1, 1, 0, 0], [x31, y31, x32, y32, 1, 1]])
    assert lower_left_minor(L, 1) == x31
    assert lower_left_minor(L, 2) == x21 * y31 - x31 * y21
    assert identity(R5, 3).lower_left_minor(3) == R5.one
    assert lower_left_minor(identity(R5, 3), 2) == R5.zero
    with pytest.raises(ValueError):
        lower_left_minor(L, 4)


def test_exact_divide():
    assert (x31 * (y32 - x32)).exact_divide(y32 - x32) == x31
    assert (x31 + 1).exact_divide(x31) is None
    with pytest.raises(ZeroDivisionError):
        x31.exact_divide(R5.zero)
    d2 = x21 * y31 - x31 * y21
    d3 = y21 * x32 - y31 - x21 * x32 + x31
    d4 = y32 - x32
    assert (x31 * d2 * d3 * d4).exact_divide(d2) == x31 * d3 * d4


def test_determinant_matches_cofactor_oracle():
    rng = random.Random(11)
    for p in (2, 3, 5):
        R = PolyRing(p, [V(1), V(2), V(3)])
        for k in range(1, 5):
            for _ in range(6):
                rows = [[random_polynomial(rng, R, rng.randint(0, 2), 2) for _ in range(k)] for _ in range(k)]
                assert SymbolicMatrix(R, rows).determinant() == cofactor_determinant(rows)


def test_minor_is_submatrix_determinant():
    rng = random.Random(5)
    R = PolyRing(3, [V(1), V(2)])
    for _ in range(10):
        rows = [[random_polynomial(rng, R, 2, 2) for _ in range(5)] for _ in range(4)]
        m = SymbolicMatrix(R, rows)
        for i in range(1, 5):
            assert lower_left_minor(m, i) == m.submatrix(range(4 - i, 4), range(i)).determinant()


def test_nullspace():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = nullspace_mod_p(rows, 3, 7)
    assert len(basis) == 2
    for b in basis:
        assert all(sum(r[c] * b[c] for c in range(3)) % 7 == 0 for r in rows)


# --- property tests -------------------------------------------------------

RING_VARS = [V(1), V(2), V(3)]


@st.composite
def polys(draw, p):
    R = PolyRing(p, RING_VARS)
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), st.integers(1, p - 1), max_size=5))
    return R.monomial((0, 0, 0), 0) + sum((R.monomial(e, c) for e, c in terms.items()), R.zero)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]).flatmap(lambda p: st.tuples(polys(p), polys(p), polys(p))))
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == a.ring.zero


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]).flatmap(polys))
def test_frobenius_identity(f):
    assert f ** f.ring.p == f.frobenius()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5]).flatmap(lambda p: st.tuples(polys(p), polys(p))))
def test_divmod_reconstructs(ab):
    f, h = ab
    if h.is_zero():
        return
    q, r = f.divmod(h)
    assert q * h + r == f
    if r.is_zero():
        assert f.exact_divide(h) == q


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5]).flatmap(polys))
def test_parse_print_bijective(f):
    assert f.ring.parse(str(f)) == f


def test_shift_then_unshift_is_identity():
    from diagsplit.splitting import DiagonalPairing

    rng = random.Random(3)
    for p in (2, 3, 5):
        R = PolyRing(p, [X(2, 1), Y(2, 1), X(3, 1), Y(3, 1)])
        pairing = DiagonalPairing(R)
        for _ in range(20):
            f = random_polynomial(rng, R, 5, 4)
            assert pairing.unshift(pairing.shift(f)) == f
