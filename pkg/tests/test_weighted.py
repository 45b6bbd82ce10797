from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polar_legendre.families import FamilyKind, pipcir, polar
from polar_legendre.poly import Polynomial, X
from polar_legendre.weighted import NotReducible, WeightKind, gram_matrix, inner_product, norm_squared

F = Fraction


def test_inner_product_examples():
    assert inner_product(pipcir(2), pipcir(4), WeightKind.QWEIGHT) == 0
    assert inner_product(pipcir(3), pipcir(3), WeightKind.QWEIGHT) == F(1, 15)
    with pytest.raises(NotReducible):
        inner_product(polar(0), polar(0), WeightKind.PWEIGHT)


def test_norm_examples():
    assert norm_squared(FamilyKind.PIPCIR, 2) == F(1, 3)
    assert norm_squared(FamilyKind.POLAR, 1) == F(4, 3)
    assert norm_squared(FamilyKind.POLAR, 2) == F(3, 5)


def test_gram_examples():
    g = gram_matrix(FamilyKind.PIPCIR, WeightKind.QWEIGHT, range(2, 7))
    expected = [F(1, 3), F(1, 15), F(1, 42), F(1, 90), F(1, 165)]
    for i in range(5):
        for j in range(5):
            assert g[i][j] == (expected[i] if i == j else 0)
    p = gram_matrix(FamilyKind.POLAR, WeightKind.PWEIGHT, range(1, 6), workers=4)
    assert all(p[i][j] == 0 for i in range(5) for j in range(5) if i != j)


def test_gram_marks_divergent_entries():
    g = gram_matrix(FamilyKind.POLAR, WeightKind.PWEIGHT, [0, 1, 2])
    assert g[0][0] is None
    assert g[0][1] == 2 and g[0][2] == -1


@pytest.mark.parametrize("n", range(2, 41))
def test_norm_qn(n):
    assert norm_squared(FamilyKind.PIPCIR, n) == F(2, n * (n - 1) * (2 * n - 1))


@pytest.mark.parametrize("n", range(1, 41))
def test_norm_pn_closed_form(n):
    assert norm_squared(FamilyKind.POLAR, n) == F(2 * (n + 1), n * (2 * n + 1))


@pytest.mark.parametrize("n", range(2, 16))
def test_pipcir_against_monomials(n):
    # (x^2 - 1) x^k with k <= n - 3 spans the polynomials vanishing at +-1 of degree < n
    q = pipcir(n)
    for k in range(0, n - 2):
        assert inner_product(q, (X ** 2 - 1) * X ** k, WeightKind.QWEIGHT) == 0
    for k in range(0, n):
        if (n - k) % 2:
            assert inner_product(q, X ** k, WeightKind.QWEIGHT) == 0


def test_pipcir_against_plain_monomial_is_not_zero():
    assert inner_product(pipcir(2), Polynomial([1]), WeightKind.QWEIGHT) == -1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12))
def test_polar_product_matches_pipcir_product(n, m):
    lhs = inner_product(polar(n), polar(m), WeightKind.PWEIGHT)
    rhs = (n + 1) * (m + 1) * inner_product(pipcir(n + 1), pipcir(m + 1), WeightKind.QWEIGHT)
    assert lhs == rhs


def test_p0_against_higher_polar_is_finite_and_nonzero():
    values = [inner_product(polar(0), polar(m), WeightKind.PWEIGHT) for m in range(1, 9)]
    assert values == [F(2), F(-1), F(2, 3), F(-1, 2), F(2, 5), F(-1, 3), F(2, 7), F(-1, 4)]
