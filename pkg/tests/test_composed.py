from fractions import Fraction

import pytest

from polar_legendre.composed import (
    CertificationError,
    Orientation,
    RationalMap,
    certify_monotone_bijection,
    composed_gram,
    cubic_map,
    exact_diagonal,
    identity_map,
    mobius_homogenized,
    mobius_map,
    printed_cubic_weight,
    pushforward_weight,
)
from polar_legendre.families import FamilyKind, polar
from polar_legendre.poly import Interval, Polynomial, X
from polar_legendre.quadrature import QuadratureError, integrate, tanh_sinh_rule
from polar_legendre.weighted import WeightKind, gram_matrix

F = Fraction


def test_certify_cubic():
    cert = certify_monotone_bijection(cubic_map())
    # 4x^2 (3 - x^2)(x^2 + 1)
    assert cert.derivative_numerator == 4 * X ** 2 * (3 - X ** 2) * (X ** 2 + 1)


def test_certify_identity_mobius():
    certify_monotone_bijection(mobius_map(1, 0, 0, 1))


def test_certify_rejects_square():
    with pytest.raises(CertificationError) as err:
        certify_monotone_bijection(RationalMap(X ** 2, Polynomial([1]), Interval(-1, 1)))
    assert len(err.value.problems) == 2
    assert err.value.witness is not None


def test_rational_map_validation():
    with pytest.raises(ValueError):
        RationalMap(X, X, Interval(-1, 1))
    with pytest.raises(ValueError):
        mobius_map(1, 0, 1, 0)  # pole at 0
    with pytest.raises(ValueError):
        mobius_map(2, 2, 1, 1)  # ad - bc = 0


def test_identity_weight_is_base_weight():
    w = pushforward_weight(identity_map())
    assert w.numerator * Polynomial([1, 1]) == w.denominator * Polynomial([1, -1])


def test_mobius_printed_weight():
    a, b, c, d = 3, 1, 1, 3
    w = pushforward_weight(mobius_map(a, b, c, d), Orientation.AS_PRINTED)
    num = Polynomial([b + d, a + c]) * (a * d - b * c)
    den = Polynomial([d, c]) ** 2 * Polynomial([d - b, c - a])
    assert w.numerator * den == w.denominator * num


def test_cubic_weight_against_printed():
    w = pushforward_weight(cubic_map(), Orientation.AS_ORTHOGONALITY)
    s = X ** 2 + 1
    fn, fd = cubic_map().derivative()
    expected_num, expected_den = fn * (s * s - 4 * X ** 3), fd * (s * s + 4 * X ** 3)
    assert w.numerator * expected_den == w.denominator * expected_num
    pn, pd = printed_cubic_weight()
    wp = pushforward_weight(cubic_map(), Orientation.AS_PRINTED)
    assert wp.numerator * pd != wp.denominator * pn


def test_identity_gram_matches_exact():
    g = composed_gram(identity_map(), max_n=5)
    exact = gram_matrix(FamilyKind.POLAR, WeightKind.PWEIGHT, range(1, 6))
    assert all(abs(g[i][j] - float(exact[i][j])) < 1e-10 for i in range(5) for j in range(5))


def test_cubic_entry_and_mobius_diagonal():
    g = composed_gram(cubic_map(), max_n=3)
    assert abs(g[1][2]) < 1e-10
    m = composed_gram(mobius_map(3, 1, 1, 3), max_n=2)
    assert abs(m[1][1] - 0.6) < 1e-10


def test_cubic_integrand_through_integrate():
    f, w = cubic_map(), pushforward_weight(cubic_map())
    p2, p3 = polar(2), polar(3)
    value, _ = integrate(lambda x: p2.eval_float(f(x)) * p3.eval_float(f(x)) * w(x), tanh_sinh_rule(7))
    assert abs(value) < 1e-10


def test_as_printed_differs():
    with pytest.raises(QuadratureError) as err:
        composed_gram(cubic_map(), Orientation.AS_PRINTED, max_n=3)
    exact = float(exact_diagonal([1])[0])
    assert err.value.estimate is not None and abs(err.value.estimate - exact) > 1e-10


@pytest.mark.parametrize("n", range(0, 9))
def test_mobius_homogenized_is_polynomial(n):
    a, b, c, d = 3, 1, 1, 3
    h = mobius_homogenized(polar(n), a, b, c, d)
    assert h.degree <= n
    for x in (F(0), F(1, 3), F(-2, 5)):
        assert h(x) == (c * x + d) ** n * polar(n)(F(a * x + b, c * x + d))
