from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polar_legendre.families import cofactor, pipcir
from polar_legendre.poly import (
    Interval,
    NotDivisible,
    Polynomial,
    X,
    antiderivative_vanishing_at,
    definite_integral,
    differentiate,
    divide_exact,
    evaluate,
    gcd,
    isolate_roots,
    square_free_part,
    sturm_root_count,
)
from strategies import nonzero_polynomials, polynomials, rationals

F = Fraction
UNIT = Interval(-1, 1)
Q2 = Polynomial([F(-1, 2), 0, F(1, 2)])


def test_evaluate_examples():
    assert evaluate(Q2, 0) == F(-1, 2)
    assert evaluate(Polynomial([0, F(3, 2), F(3, 2)]), 1) == 3


@given(polynomials())
def test_evaluate_at_zero_is_constant_term(p):
    assert evaluate(p, 0) == (p.coeffs[0] if p.coeffs else 0)


def test_differentiate_examples():
    assert differentiate(Q2) == X
    assert differentiate(Polynomial([7])).is_zero()
    q4 = Polynomial([1, 0, -6, 0, 5]) / 8
    assert differentiate(q4) == Polynomial([0, -12, 0, 20]) / 8


def test_antiderivative_examples():
    assert antiderivative_vanishing_at(X, 1) == Q2
    assert antiderivative_vanishing_at(Polynomial(), 3).is_zero()
    l2 = Polynomial([-1, 0, 3]) / 2
    assert antiderivative_vanishing_at(l2, 1) == Polynomial([0, -1, 0, 1]) / 2


@given(polynomials(), rationals)
def test_antiderivative_round_trip(p, x0):
    a = antiderivative_vanishing_at(p, x0)
    assert a.derivative() == p
    assert a(x0) == 0


def test_definite_integral_examples():
    assert definite_integral(X ** 2) == F(2, 3)
    assert definite_integral(X ** 7) == 0
    assert definite_integral(X ** 2 * (1 - X ** 2) / 4) == F(1, 15)


@given(polynomials())
def test_odd_part_integrates_to_zero(p):
    odd = Polynomial([c if i % 2 else 0 for i, c in enumerate(p.coeffs)])
    assert definite_integral(odd, UNIT) == 0


def test_divide_exact_examples():
    assert divide_exact(Polynomial([0, -1, 0, 1]) * F(3, 2), X - 1) == Polynomial([0, F(3, 2), F(3, 2)])
    assert divide_exact(Q2, Polynomial([1])) == Q2
    with pytest.raises(NotDivisible) as err:
        divide_exact(Q2, X - 2)
    assert err.value.remainder == Polynomial([F(3, 2)])


@settings(max_examples=60)
@given(polynomials(20), nonzero_polynomials(20))
def test_divide_exact_round_trip(p, d):
    assert divide_exact(p * d, d) == p


@given(polynomials(6), nonzero_polynomials(6))
def test_divmod_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_sturm_examples():
    assert sturm_root_count(X ** 2 - F(1, 5), UNIT) == 2
    assert sturm_root_count(X ** 2 + 1, UNIT) == 0
    assert sturm_root_count(cofactor(6), UNIT) == 4


def test_sturm_half_open_convention():
    # a root at lo is excluded, a root at hi is counted
    assert sturm_root_count(X + 1, UNIT) == 0
    assert sturm_root_count(X - 1, UNIT) == 1


def test_sturm_ignores_multiplicity():
    assert sturm_root_count((X - F(1, 3)) ** 3 * (X + F(1, 2)), UNIT) == 2


@pytest.mark.parametrize("n", range(2, 41))
def test_cofactor_roots_interior_and_simple(n):
    assert sturm_root_count(cofactor(n), UNIT) == n - 2
    assert square_free_part(cofactor(n)).degree == n - 2


@pytest.mark.parametrize("n", range(2, 41))
def test_inflections_coincide_with_interior_roots(n):
    # the second derivative is a constant multiple of the cofactor
    quotient = divide_exact(pipcir(n).derivative(2), cofactor(n))
    assert quotient == Polynomial([n * (n - 1)])


def test_isolate_examples():
    boxes = isolate_roots(X ** 2 - F(1, 5), UNIT, F(1, 1000))
    assert len(boxes) == 2
    assert all(iv.width <= F(1, 1000) for iv in boxes)
    assert boxes[0].lo < -0.44721 < boxes[0].hi and boxes[1].lo < 0.44721 < boxes[1].hi
    (one,) = isolate_roots(X - F(1, 2), UNIT, F(1, 64))
    assert F(1, 2) in one
    # Q_5 / x = (x^2 - 1)(7x^2 - 3)/8: roots -1, +-sqrt(3/7), 1
    four = isolate_roots(divide_exact(pipcir(5), X), UNIT, F(1, 10 ** 6))
    assert len(four) == 4
    mids = sorted(float(iv.mid) for iv in four)
    assert all(abs(a + b) < 1e-5 for a, b in zip(mids, reversed(mids)))


def test_isolate_root_on_left_endpoint():
    boxes = isolate_roots(X ** 2 - 1, UNIT, F(1, 100))
    assert len(boxes) == 2
    assert boxes[0].hi == -1 and boxes[1].hi == 1


@settings(max_examples=40)
@given(st.lists(st.builds(F, st.integers(-20, 20), st.just(21)), min_size=1, max_size=5, unique=True))
def test_isolate_recovers_planted_roots(roots):
    p = Polynomial([1])
    for r in roots:
        p = p * (X - r)
    boxes = isolate_roots(p, Interval(F(-3, 2), 1), F(1, 10 ** 4))
    assert len(boxes) == len(roots)
    for iv, r in zip(boxes, sorted(roots)):
        assert iv.lo < r <= iv.hi


def test_gcd_monic():
    g = gcd((X - 1) * (X + 2) * 6, (X - 1) * (X - 5) * 4)
    assert g == X - 1


def test_str_rendering():
    assert str(Q2) == "1/2*x^2 - 1/2"
    assert str(Polynomial()) == "0"
