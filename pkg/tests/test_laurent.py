import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kerovpoly.laurent import (
    AboveTruncation,
    AscendingSeries,
    BadCompositionShape,
    BelowTruncation,
    DescendingSeries,
    NonUnitLeading,
    PositiveTopDegree,
    asc_coefficient,
    asc_D,
    asc_mul,
    asc_reciprocal,
    compositional_inverse,
    flip_variable,
    residue,
    series_coefficient,
    series_compose,
    series_derivative,
    series_mul,
    series_reciprocal,
    taylor_shift,
)
from kerovpoly.polyring import ONE, ZERO, R

from oracles import binomial_shift, geometric_reciprocal, lp_compose, lp_mul

D = DescendingSeries


def numeric(s):
    return {d: c.constant_term for d, c in s.coefficients().items()}


def truth_matches(s, exact):
    """Every retained coefficient of ``s`` equals the exact value."""
    return all(s.coefficient(d).constant_term == exact.get(d, 0) for d in range(s.floor, s.top + 1)) \
        and all(d <= s.top for d in exact if d >= s.floor)


def random_change_of_variable(rng, floor, symbolic=False):
    coeffs = {1: 1}
    for d in range(-1, floor - 1, -1):
        if rng.random() < 0.7:
            c = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2, 3]))
            coeffs[d] = c * R(rng.randint(2, 3)) if symbolic else c
    return D(coeffs, floor)


def random_series(rng, top, floor):
    coeffs = {d: Fraction(rng.randint(-4, 4), rng.choice([1, 2])) for d in range(floor, top + 1)}
    coeffs[top] = coeffs[top] or 1
    return D(coeffs, floor)


# -- examples ----------------------------------------------------------


def test_mul_difference_of_squares():
    a = D({1: 1, -1: R(2)}, -3)
    b = D({1: 1, -1: -R(2)}, -3)
    p = series_mul(a, b)
    assert p.floor == -2
    assert p.coefficients() == {2: ONE, -2: -R(2, 2)}


def test_mul_trivial():
    z = D.monomial(1, -4)
    assert series_mul(z, z).coefficients() == {2: ONE}
    zero = D.zero(-4)
    assert series_mul(zero, z).is_zero()


def test_derivative_examples():
    f = series_derivative(D({1: 1, -1: R(2)}, -4))
    assert f.coefficients() == {0: ONE, -2: -R(2)}
    assert f.floor == -5
    assert series_derivative(D({0: R(3)}, -3)).is_zero()
    assert series_derivative(D({-2: 1}, -4)).coefficients() == {-3: -2 * ONE}


def test_coefficient_examples():
    f = D({1: 1, -1: R(2)}, -3)
    assert series_coefficient(f, -1) == R(2) == residue(f)
    assert series_coefficient(f, 0) == ZERO
    assert series_coefficient(f, 5) == ZERO
    with pytest.raises(BelowTruncation) as exc:
        series_coefficient(f, -4)
    assert (exc.value.degree, exc.value.floor) == (-4, -3)


def test_reciprocal_of_F_shape():
    # 1 / (1 - R2 z^-2 - 2 R3 z^-3 - 3 R4 z^-4)
    f = D({0: 1, -2: -R(2), -3: -2 * R(3), -4: -3 * R(4)}, -4)
    g = series_reciprocal(f)
    assert g.floor == -4
    assert g.coefficients() == {0: ONE, -2: R(2), -3: 2 * R(3), -4: R(2, 2) + 3 * R(4)}


def test_reciprocal_trivial():
    assert series_reciprocal(D({0: 1}, -3)).coefficients() == {0: ONE}
    r = series_reciprocal(D.monomial(1, -3))
    assert r.coefficients() == {-1: ONE}
    with pytest.raises(NonUnitLeading):
        series_reciprocal(D({0: R(2)}, -3))


def test_reciprocal_matches_geometric_series():
    rng = random.Random(7)
    for _ in range(30):
        w = {d: Fraction(rng.randint(-3, 3), rng.choice([1, 2])) for d in range(-1, -7, -1)}
        f = D({0: 1, **{d: -c for d, c in w.items()}}, -6)
        assert truth_matches(series_reciprocal(f), geometric_reciprocal(w, -6))


def test_taylor_shift_examples():
    assert taylor_shift(D.monomial(1, -3), 1).coefficients() == {1: ONE, 0: -ONE}
    assert taylor_shift(D.monomial(2, -3), 1).coefficients() == {2: ONE, 1: -2 * ONE, 0: ONE}


def test_taylor_shift_matches_binomial_expansion():
    rng = random.Random(11)
    for _ in range(30):
        f = random_series(rng, rng.randint(-1, 2), -7)
        a = Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
        shifted = taylor_shift(f, a)
        assert shifted.floor == f.floor
        assert truth_matches(shifted, binomial_shift(numeric(f), a, f.floor))


def test_compose_examples():
    g = D({1: 1, -1: R(2)}, -3)
    out = series_compose(D.monomial(2, -3), g)
    assert out.floor == -2
    assert out.coefficients() == {2: ONE, 0: 2 * R(2), -2: R(2, 2)}
    f = D({1: 1, -1: R(2), -2: R(3)}, -5)
    assert series_compose(f, D.monomial(1, -6)) == f


def test_compose_against_brute_force():
    rng = random.Random(5)
    for _ in range(25):
        f = random_series(rng, rng.randint(-2, 3), -6)
        g = random_change_of_variable(rng, -6)
        out = series_compose(f, g)
        assert out.floor == max(f.floor, f.top + g.floor - 1)
        # the claimed coefficients must not depend on the unknown tails
        for tail in (0, 1, -2):
            f_ext = {**numeric(f), f.floor - 1: Fraction(tail)}
            g_ext = {**numeric(g), g.floor - 1: Fraction(tail, 3)}
            assert truth_matches(out, lp_compose(f_ext, g_ext, out.floor))


def test_compose_shape_errors():
    with pytest.raises(BadCompositionShape):
        series_compose(D.monomial(1, -3), D({1: 2}, -3))
    with pytest.raises(BadCompositionShape):
        series_compose(D.monomial(1, -3), D({1: 1, 0: 1}, -3))
    with pytest.raises(BadCompositionShape):
        compositional_inverse(D({2: 1}, -3))


def test_inverse_examples():
    z = D.monomial(1, -5)
    assert compositional_inverse(z) == z
    L = D({1: 1, -1: R(2), -2: R(3), -3: R(4)}, -4)
    H = compositional_inverse(L)
    assert H.truncate(-3).coefficients() == {1: ONE, -1: -R(2), -2: -R(3), -3: -(R(4) + R(2, 2))}
    # B_5 = R_5 + 3 R_2 R_3, and R_5 is absent from this L
    assert H.coefficient(-4) == -3 * R(2) * R(3)
    assert series_compose(H, L).coefficients() == {1: ONE}


def test_compose_H_L_is_identity():
    L = D({1: 1, -1: R(2), -2: R(3), -3: R(4), -4: R(5)}, -6)
    H = compositional_inverse(L)
    assert series_compose(H, L).coefficients() == {1: ONE}
    assert series_compose(L, H).coefficients() == {1: ONE}


def test_mul_floor_contract():
    rng = random.Random(3)
    for _ in range(20):
        a = random_series(rng, rng.randint(-1, 2), -5)
        b = random_series(rng, rng.randint(-1, 2), -5)
        deep_a = D({**numeric(a), -6: 1, -7: 2}, -7)
        deep_b = D({**numeric(b), -6: -1, -8: 5}, -8)
        shallow, deep = series_mul(a, b), series_mul(deep_a, deep_b)
        assert shallow.floor == max(a.top + b.floor, b.top + a.floor)
        assert shallow.agrees_with(deep)
        assert truth_matches(shallow, lp_mul(numeric(deep_a), numeric(deep_b), shallow.floor))


def test_compose_associative():
    rng = random.Random(19)
    for _ in range(15):
        f = random_change_of_variable(rng, -6, symbolic=True)
        g = random_change_of_variable(rng, -6, symbolic=True)
        h = random_change_of_variable(rng, -6)
        left = series_compose(series_compose(f, g), h)
        right = series_compose(f, series_compose(g, h))
        assert left.agrees_with(right)


# -- ascending ---------------------------------------------------------


def test_flip_examples():
    a = flip_variable(D({0: 1, -2: R(2)}, -4))
    assert isinstance(a, AscendingSeries)
    assert a.coefficients() == {0: ONE, 2: R(2)}
    assert (a.bottom, a.ceiling) == (0, 4)
    z = flip_variable(D.monomial(-1, -3))
    assert z.coefficients() == {1: ONE}
    with pytest.raises(PositiveTopDegree):
        flip_variable(D.monomial(1, -3))


def test_asc_D_examples():
    assert asc_D(AscendingSeries({3: 1}, 5)).coefficients() == {3: 3 * ONE}
    assert asc_D(AscendingSeries({0: 1}, 5)).is_zero()


def test_asc_square_constant_term():
    C = AscendingSeries({0: 1, 2: R(2), 3: 2 * R(3)}, 5)
    assert asc_coefficient(asc_mul(C, C), 0) == ONE
    with pytest.raises(AboveTruncation):
        asc_coefficient(C, 6)


def test_asc_mul_ceiling_rule():
    a = AscendingSeries({1: 1, 2: 3}, 4)
    b = AscendingSeries({0: 2, 3: 1}, 5)
    p = asc_mul(a, b)
    assert p.ceiling == min(a.bottom + b.ceiling, b.bottom + a.ceiling) == 4
    assert p.coefficients() == {1: 2 * ONE, 2: 6 * ONE, 4: ONE}


def test_asc_reciprocal():
    C = AscendingSeries({0: 1, 2: R(2)}, 6)
    inv = asc_reciprocal(C)
    assert asc_mul(C, inv).coefficients() == {0: ONE}
    assert inv.coefficient(2) == -R(2) and inv.coefficient(4) == R(2, 2)


# -- properties --------------------------------------------------------

seeds = st.integers(0, 10 ** 6)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_inverse_round_trip(seed):
    f = random_change_of_variable(random.Random(seed), -7, symbolic=seed % 2 == 0)
    g = compositional_inverse(f)
    z = D.monomial(1, f.floor)
    assert series_compose(f, g).agrees_with(z)
    assert series_compose(g, f).agrees_with(z)


@settings(max_examples=100, deadline=None)
@given(seeds, st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_taylor_shift_round_trip(seed, a):
    f = random_series(random.Random(seed), 2, -6)
    assert taylor_shift(taylor_shift(f, a), -a) == f


@settings(max_examples=100)
@given(seeds)
def test_flip_involution(seed):
    rng = random.Random(seed)
    f = random_series(rng, rng.randint(-3, 0), -6)
    back = flip_variable(flip_variable(f))
    assert back == f
    assert all(flip_variable(f).coefficient(-d) == c for d, c in f.coefficients().items())
