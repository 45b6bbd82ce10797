import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polar_legendre.families import polar
from polar_legendre.kernels import (
    KernelSpec,
    SpanError,
    christoffel_darboux,
    christoffel_darboux_verbatim,
    expand_in_span,
    kernel_in_x,
    kernel_value,
    kernel_zero_gram,
    reproduce,
)
from polar_legendre.poly import Polynomial, X
from strategies import rationals

F = Fraction


def test_kernel_slices():
    assert kernel_in_x(KernelSpec((1,)), 1) == (X + 1) * F(3, 2)
    assert kernel_in_x(KernelSpec(()), F(1, 3)).is_zero()
    assert kernel_in_x(KernelSpec((1, 2)), 0) == (X + 1) * F(3, 4)


def test_kernel_values():
    assert kernel_value(KernelSpec((1, 2)), 0, 0) == F(3, 4)
    assert kernel_value(KernelSpec((1,)), -1, F(2, 7)) == 0
    assert kernel_value(KernelSpec((1, 2, 3)), 0, 0) == F(45, 32)


def test_cd_examples():
    spec = KernelSpec.upto(2)
    assert christoffel_darboux(spec, 0, F(1, 2)) == kernel_value(spec, 0, F(1, 2)) == F(9, 8)
    assert christoffel_darboux(KernelSpec.upto(1), 1, -1) == 0
    assert christoffel_darboux_verbatim(2, 0, F(1, 2)) == F(15, 8)


def test_cd_needs_contiguous_from_one():
    with pytest.raises(ValueError):
        christoffel_darboux(KernelSpec((2, 3)), 0, F(1, 2))


def test_spec_rejects_p0():
    with pytest.raises(ValueError):
        KernelSpec((0, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 15), rationals, rationals)
def test_symmetry_and_cd(n, x, y):
    spec = KernelSpec.upto(n)
    k = kernel_value(spec, x, y)
    assert k == kernel_value(spec, y, x)
    assert k == christoffel_darboux(spec, x, y)


def test_reproduce_examples():
    assert reproduce(polar(3), KernelSpec.upto(3)) == polar(3)
    assert reproduce(Polynomial(), KernelSpec.upto(3)).is_zero()
    with pytest.raises(SpanError):
        reproduce(polar(2), KernelSpec((1,)))


def test_reproduce_random_combinations():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(1, 8)
        f = sum((polar(k) * F(rng.randint(-9, 9), rng.randint(1, 9)) for k in range(1, n + 1)), Polynomial())
        assert reproduce(f, KernelSpec.upto(n)) == f


def test_expand_in_span_recovers_coefficients():
    f = polar(1) * 2 - polar(3) * F(1, 3)
    assert expand_in_span(f, [1, 2, 3]) == {1: 2, 2: 0, 3: F(-1, 3)}


def test_kernel_zero_gram_vanishes():
    # every entry is exactly zero, the diagonal included
    for start in (1, 2):
        g = kernel_zero_gram(6, start)
        assert all(v == 0 for row in g for v in row)
