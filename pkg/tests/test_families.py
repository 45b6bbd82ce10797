from fractions import Fraction

import pytest

from polar_legendre.families import (
    FamilyKind,
    cofactor,
    diff3_residual,
    family,
    legendre,
    legendre_rodrigues,
    ode_residual,
    pipcir,
    pipcir_explicit,
    pipcir_rodrigues,
    polar,
    polar_rodrigues,
    recurrence_residual_pipcir,
    second_identity_residual,
    shifted_binomial_legendre,
    special_values,
)
from polar_legendre.numeric import binomial, factorial
from polar_legendre.poly import Polynomial, X

F = Fraction

# coefficient listing for Q_2..Q_6, low to high, times the common denominator
LISTING = {
    2: ([-1, 0, 1], 2),
    3: ([0, -1, 0, 1], 2),
    4: ([1, 0, -6, 0, 5], 8),
    5: ([0, 3, 0, -10, 0, 7], 8),
    6: ([-1, 0, 15, 0, -35, 0, 21], 16),
}


@pytest.mark.parametrize("n", sorted(LISTING))
def test_pipcir_listing(n):
    coeffs, den = LISTING[n]
    assert pipcir(n) == Polynomial(coeffs) / den


def test_legendre_examples():
    assert legendre(0) == Polynomial([1])
    assert legendre(2) == Polynomial([-1, 0, 3]) / 2
    assert legendre(2)(0) == F(-1, 2)
    assert pipcir(4)(0) == F(1, 8)


def test_polar_examples():
    assert polar(0) == Polynomial([1])
    assert polar(1) == X + 1
    assert polar(2) == Polynomial([0, 3, 3]) / 2
    assert polar(3) == Polynomial([-1, -1, 5, 5]) / 2


def test_rodrigues_examples():
    assert pipcir_rodrigues(2) == Polynomial([-1, 0, 1]) / 2
    assert pipcir_rodrigues(3) == Polynomial([0, -1, 0, 1]) / 2
    assert polar_rodrigues(1) == X + 1
    assert polar_rodrigues(2) == Polynomial([0, 3, 3]) / 2
    assert polar_rodrigues(3) == (X + 1) * (5 * X ** 2 - 1) / 2


def test_explicit_examples():
    assert pipcir_explicit(2) == X ** 2 / 2 - F(1, 2)
    assert pipcir_explicit(3) == (X ** 3 - X) / 2
    assert pipcir_explicit(5) == Polynomial([0, 3, 0, -10, 0, 7]) / 8


def test_explicit_with_double_factorial_denominator_departs_from_q3():
    assert pipcir_explicit(2, "double_factorial") == pipcir(2)
    assert pipcir_explicit(3, "double_factorial") == X ** 3 - X / 2


def test_shifted_binomial_examples():
    assert shifted_binomial_legendre(0) == Polynomial([1])
    assert shifted_binomial_legendre(1) == X
    assert shifted_binomial_legendre(2) == legendre(2)


@pytest.mark.parametrize("n", range(0, 26))
def test_route_equivalence(n):
    assert legendre(n) == legendre_rodrigues(n) == shifted_binomial_legendre(n)
    if n >= 1:
        assert polar(n) == polar_rodrigues(n)
    if n >= 2:
        assert pipcir(n) == pipcir_rodrigues(n) == pipcir_explicit(n)


@pytest.mark.parametrize("n", range(2, 41))
def test_derivative_of_pipcir_is_legendre(n):
    assert pipcir(n).derivative() == legendre(n - 1)
    assert pipcir(n).derivative()(1) == 1


@pytest.mark.parametrize("n", range(0, 41))
def test_polar_identities(n):
    P = polar(n)
    assert (X - 1) * P.derivative() + P == legendre(n) * (n + 1)
    assert P(1) == n + 1
    assert P.derivative()(0) == P(0) - (n + 1) * legendre(n)(0)
    assert ode_residual(FamilyKind.POLAR, n).is_zero()
    if n >= 1:
        assert P(-1) == 0
        # leading coefficient is that of L_n
        assert P.leading == F(factorial(2 * n), 2 ** n * factorial(n) ** 2)


@pytest.mark.parametrize("n", range(2, 41))
def test_ode_and_recurrence_residuals(n):
    assert ode_residual(FamilyKind.PIPCIR, n).is_zero()
    assert ode_residual(FamilyKind.LEGENDRE, n).is_zero()
    assert diff3_residual(n).is_zero()
    if n >= 3:
        a, b = recurrence_residual_pipcir(n)
        assert a.is_zero() and b.is_zero()


@pytest.mark.parametrize("n", range(2, 21))
def test_second_identity(n):
    assert second_identity_residual(n).is_zero()


@pytest.mark.parametrize("n", range(2, 30))
def test_parity(n):
    q = pipcir(n)
    assert q.is_even() if n % 2 == 0 else q.is_odd()
    if n % 2 == 0:
        assert polar(n)(0) == 0


def test_cofactor_factorization():
    for n in range(2, 15):
        assert (X ** 2 - 1) * cofactor(n) == pipcir(n)


def test_special_values():
    sv = special_values(FamilyKind.POLAR, 2)
    assert sv.value_at_plus1 == 3
    assert sv.deriv_at_plus1 == F(9, 2)
    for n in range(2, 12):
        assert special_values(FamilyKind.PIPCIR, n).value_at_plus1 == 0


def test_polar_derivative_at_one_follows_the_ode():
    for n in range(0, 20):
        assert 4 * polar(n).derivative()(1) == n * (n + 1) * polar(n)(1)


def test_lnat0_closed_form():
    for n in range(0, 20):
        s = sum((-1) ** (n - k) * binomial(n, k) ** 2 for k in range(n + 1))
        assert legendre(n)(0) == F(s, 2 ** n)


def test_index_domain():
    with pytest.raises(ValueError):
        pipcir(1)
    with pytest.raises(ValueError):
        legendre(-1)
    assert family(FamilyKind.POLAR, 2) == polar(2)
