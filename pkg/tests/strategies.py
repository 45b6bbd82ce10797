from fractions import Fraction

from hypothesis import strategies as st

from polar_legendre.poly import Polynomial

small_ints = st.integers(min_value=-50, max_value=50)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=30))
unit_rationals = st.builds(Fraction, st.integers(-29, 29), st.just(30)) | st.builds(Fraction, st.integers(-6, 6), st.just(7))


def polynomials(max_degree=8, coeffs=rationals):
    return st.lists(coeffs, min_size=0, max_size=max_degree + 1).map(Polynomial)


def nonzero_polynomials(max_degree=8):
    return polynomials(max_degree).filter(lambda p: not p.is_zero())
