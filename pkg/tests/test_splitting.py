from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagsplit.algebra import PolyRing, V, X, Y
from diagsplit.diagonal import chart_pairing, chart_ring, f_operator, f_section
from diagsplit.splitting import (
    DiagonalPairing,
    DiagonalPower,
    MonomialIdeal,
    NotASplitting,
    Principal,
    SplittingOperator,
    Sum,
    UndecidableSpec,
    Variables,
    apply,
    check_compatibility,
    compatibly_splits,
    is_maximally_split_diagonal,
    is_splitting,
    maximality_operator_check,
    maximality_search,
    normalize,
    vanishing_order_on_diagonal,
    variables_verdict_by_enumeration,
)
from oracles import apply_by_product, random_polynomial, random_splitting_section


def one_var(p):
    R = PolyRing(p, [V(1)])
    return R, R.gen(V(1))


def xy_ring(p):
    R = PolyRing(p, [X(2, 1), Y(2, 1)])
    return R, *R.gens()


def test_apply_examples():
    R, v = one_var(2)
    assert apply(SplittingOperator(v), R.one) == R.one
    R, v = one_var(3)
    op = SplittingOperator(v**2)
    assert op(v**3) == v
    assert op(v) == R.zero


def test_zero_section_rejected():
    R, _ = one_var(2)
    with pytest.raises(ValueError):
        SplittingOperator(R.zero)


def test_is_splitting_examples():
    for p in (2, 3, 5):
        R = chart_ring(3, p)
        std = SplittingOperator(R.monomial(tuple([p - 1] * R.nvars)))
        assert is_splitting(std)
        R1, v = one_var(p)
        assert not is_splitting(SplittingOperator(v**p))
    assert is_splitting(f_operator(3, 2))


def test_normalize():
    R, v = one_var(5)
    op, c = normalize(SplittingOperator(v**4 * 3))
    assert c == 2 and is_splitting(op)
    op2, c2 = normalize(SplittingOperator(v**4))
    assert c2 == 1 and op2.section == v**4
    # nothing to rescale when apply(1) is not a constant
    _, c3 = normalize(SplittingOperator(v**9))
    assert c3 == 1


def test_apply_matches_product_definition():
    rng = random.Random(2)
    for p in (2, 3, 5):
        R = PolyRing(p, [V(1), V(2), V(3)])
        for _ in range(40):
            s = random_polynomial(rng, R, 4, 2 * p)
            if s.is_zero():
                continue
            g = random_polynomial(rng, R, 4, 2 * p)
            assert SplittingOperator(s).apply(g) == apply_by_product(s, g)


@st.composite
def linearity_case(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    R = PolyRing(p, [V(1), V(2)])
    exps = st.tuples(st.integers(0, 2 * p), st.integers(0, 2 * p))

    def poly(max_size):
        terms = draw(st.dictionaries(exps, st.integers(1, p - 1), min_size=1, max_size=max_size))
        return sum((R.monomial(e, c) for e, c in terms.items()), R.zero)

    return poly(5), poly(3), poly(4)


@settings(max_examples=100, deadline=None)
@given(linearity_case())
def test_p_linearity_property(case):
    s, h, g = case
    op = SplittingOperator(s)
    assert op(h ** s.ring.p * g) == h * op(g)
    # additivity
    assert op(h + g) == op(h) + op(g)


def test_determinism():
    op = f_operator(3, 3)
    assert op(op.ring.one) == op(op.ring.one) == op.ring.one


def test_compatibly_splits_examples():
    R = chart_ring(3, 2)
    std = SplittingOperator(R.monomial(tuple([1] * R.nvars)))
    for k in range(1, 4):
        for vs in itertools.combinations(R.variables, k):
            assert compatibly_splits(std, Variables(R, vs))
    op = f_operator(3, 2)
    assert compatibly_splits(op, Variables(R, [X(3, 1), Y(3, 1)]))
    det2 = R.gen(X(2, 1)) * R.gen(Y(3, 1)) - R.gen(X(3, 1)) * R.gen(Y(2, 1))
    assert compatibly_splits(op, Principal(det2))


def test_incompatible_ideals_detected():
    op = f_operator(3, 2)
    R = op.ring
    v = check_compatibility(op, Variables(R, [Y(3, 2)]))
    assert not v.holds and v.witness
    assert not compatibly_splits(op, Principal(R.gen(X(3, 2)) + 1))


def test_non_splitting_is_rejected():
    R, v = one_var(3)
    with pytest.raises(NotASplitting):
        compatibly_splits(SplittingOperator(v**3), Variables(R, [V(1)]))


def test_variables_criterion_matches_enumeration():
    rng = random.Random(7)
    for p in (2, 3):
        for N in range(1, 7):
            R = PolyRing(p, [V(k) for k in range(1, N + 1)])
            for _ in range(6 if N < 6 else 3):
                op = SplittingOperator(random_splitting_section(rng, R, rng.randint(0, 6), 2 * p))
                vs = rng.sample(R.variables, rng.randint(1, N))
                ideal = Variables(R, vs)
                assert compatibly_splits(op, ideal) == variables_verdict_by_enumeration(op, ideal).holds


def test_principal_sampling_is_flagged():
    op = f_operator(3, 2)
    h = op.factors[1][0]
    exact = check_compatibility(op, Principal(h))
    sampled = check_compatibility(op, Principal(h), limit=10, samples=50, seed=1)
    assert exact.holds and exact.exact
    assert sampled.holds and not sampled.exact


def test_monomial_ideal_and_intersection():
    op = f_operator(3, 2)
    R = op.ring
    a = Variables(R, [X(3, 1), Y(3, 1)])
    b = Variables(R, [X(3, 1), X(2, 1)])
    inter = MonomialIdeal.intersection(a, b)
    assert inter.contains(R.gen(X(3, 1))) and inter.contains(R.gen(Y(3, 1)) * R.gen(X(2, 1)))
    assert not inter.contains(R.gen(Y(3, 1)))
    assert compatibly_splits(op, inter)
    assert compatibly_splits(op, Sum([a, b]))


def test_sum_normal_form():
    op = f_operator(3, 2)
    R = op.ring
    h1, h2 = op.factors[0][0], op.factors[1][0]
    with pytest.raises(UndecidableSpec, match="undecidable spec"):
        Sum([Principal(h1), Principal(h2)])
    pairing = chart_pairing(3, 2)
    with pytest.raises(UndecidableSpec):
        Sum([Variables(R, [X(3, 1)]), DiagonalPower(pairing, 1)])
    s = Sum([Variables(R, [X(3, 1)]), Principal(h2)])
    # (x31, x21*y31 - x31*y21) = (x31, x21*y31)
    assert s.contains(R.gen(X(2, 1)) * R.gen(Y(3, 1)))
    assert not s.contains(R.gen(X(2, 1)))
    assert compatibly_splits(op, s)
    ds = Sum([Variables(R, [X(3, 1), Y(3, 1)]), DiagonalPower(pairing, 1)])
    assert compatibly_splits(op, ds)


def test_diagonal_power_compatibility():
    op = f_operator(3, 2)
    pairing = chart_pairing(3, 2)
    assert compatibly_splits(op, DiagonalPower(pairing, 1))
    R, x, y = xy_ring(3)
    ctl = SplittingOperator((x * y) ** 2)
    assert not compatibly_splits(ctl, DiagonalPower(DiagonalPairing(R), 1))


def test_vanishing_order_examples():
    pairing = chart_pairing(3, 5)
    f = f_section(3, 5)
    assert vanishing_order_on_diagonal(f, pairing) == 3
    R = f.ring
    det2 = R.gen(X(2, 1)) * R.gen(Y(3, 1)) - R.gen(X(3, 1)) * R.gen(Y(2, 1))
    assert vanishing_order_on_diagonal(det2, pairing) == 1
    assert vanishing_order_on_diagonal(R.one, pairing) == 0


def test_maximal_diagonal_examples():
    op = f_operator(3, 2)
    assert is_maximally_split_diagonal(op, chart_pairing(3, 2), 3)
    for p in (2, 3, 5):
        R, x, y = xy_ring(p)
        ctl = SplittingOperator((x * y) ** (p - 1))
        assert not is_maximally_split_diagonal(ctl, DiagonalPairing(R), 1)
        assert not maximality_operator_check(ctl, DiagonalPairing(R), 1, m_max=1)
        assert is_maximally_split_diagonal(ctl, DiagonalPairing(R, []), 0)


def test_order_above_bound_is_an_error(monkeypatch):
    import diagsplit.splitting as sp

    R, x, y = xy_ring(2)
    with pytest.raises(NotASplitting):
        is_maximally_split_diagonal(SplittingOperator(x * (y - x) ** 3), DiagonalPairing(R), 1)
    # a genuine splitting never exceeds d(p-1); fake the order to reach the guard
    monkeypatch.setattr(sp, "section_vanishing_order", lambda op, pairing: 5)
    with pytest.raises(NotASplitting, match="impossible for a splitting"):
        is_maximally_split_diagonal(SplittingOperator(x * y), DiagonalPairing(R), 1)


def test_maximality_operator_examples():
    op1 = SplittingOperator(f_section(3, 2))
    pairing = chart_pairing(3, 2)
    assert maximality_operator_check(op1, pairing, 3, m_max=1, deg_bound=op1.section.degree() + 3)
    assert maximality_operator_check(op1, pairing, 3, m_max=0)
    with pytest.raises(ValueError):
        maximality_search(op1, pairing, 2, m_max=1)


def test_minimal_lifts_agree_with_exhaustive_search():
    rng = random.Random(19)
    for p in (2, 3):
        for d in (1, 2):
            xs = [X(k + 2, 1) for k in range(d)]
            R = PolyRing(p, [v for x in xs for v in (x, Y(x.i, x.j))])
            pairing = DiagonalPairing(R)
            for _ in range(6):
                shifted = random_splitting_section(rng, pairing.shifted_ring, rng.randint(0, 4), 2 * p - 1)
                op = SplittingOperator(pairing.unshift(shifted))
                fast = maximality_search(op, pairing, d, m_max=2, deg_bound=4 * p)
                slow = maximality_search(op, pairing, d, m_max=2, deg_bound=4 * p, exhaustive=True)
                assert fast.holds == slow.holds == is_maximally_split_diagonal(op, pairing, d)


def test_shift_commutes_with_apply():
    rng = random.Random(4)
    for n, p in ((2, 3), (3, 2)):
        op = f_operator(n, p)
        pairing = chart_pairing(n, p)
        sop = op.shifted(pairing)
        assert sop.section == pairing.shift(op.section)
        for _ in range(25):
            g = random_polynomial(rng, op.ring, 3, 3 * p)
            assert pairing.shift(op(g)) == sop(pairing.shift(g))


def test_operator_serialization_roundtrip():
    op = f_operator(3, 3)
    back = SplittingOperator.from_dict(op.to_dict())
    assert back.section == op.section and back.ring == op.ring
    loose = SplittingOperator.from_dict({"p": 2, "section": "v[1]*v[2]"})
    assert is_splitting(loose)
