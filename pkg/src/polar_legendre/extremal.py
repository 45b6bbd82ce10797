"""Minimize the integral of f^2 (1-x)/(1+x) over f in a polar span with f(1) = 1.

The feasible set is span{P_k : k in K}. ``solve_extremal`` uses the closed
form that orthogonality gives; ``oracle_minimize`` solves the full bordered
stationarity system (Gram matrix plus Lagrange multiplier) without assuming
orthogonality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .families import FamilyKind, polar
from .kernels import SpanError
from .numeric import solve_exact
from .poly import Polynomial
from .weighted import WeightKind, inner_product, norm_squared

__all__ = [
    "ExtremalSolution",
    "oracle_minimize",
    "printed_Fn",
    "printed_minimum",
    "solve_extremal",
]

ONE = Fraction(1)


@dataclass(frozen=True)
class ExtremalSolution:
    indices: tuple[int, ...]
    coefficients: dict[int, Fraction]
    minimum: Fraction
    minimizer: Polynomial


def _normalize(indices: Iterable[int]) -> tuple[int, ...]:
    idx = tuple(sorted(set(indices)))
    if not idx:
        raise ValueError("index set must be nonempty")
    if idx[0] < 1:
        raise ValueError("P_0 has no finite norm under (1-x)/(1+x)")
    return idx


def _combine(coeffs: dict[int, Fraction]) -> Polynomial:
    return sum((polar(k) * a for k, a in coeffs.items()), Polynomial())


def solve_extremal(indices: Iterable[int]) -> ExtremalSolution:
    idx = _normalize(indices)
    ratios = {k: polar(k)(ONE) / norm_squared(FamilyKind.POLAR, k) for k in idx}
    total = sum(polar(k)(ONE) * ratios[k] for k in idx)
    minimum = 1 / total
    coeffs = {k: ratios[k] * minimum for k in idx}
    return ExtremalSolution(idx, coeffs, minimum, _combine(coeffs))


def oracle_minimize(indices: Iterable[int]) -> ExtremalSolution:
    """Exact solve of  2 G a + beta v = 0,  v . a = 1  with v_k = P_k(1)."""
    idx = _normalize(indices)
    basis = [polar(k) for k in idx]
    v = [p(ONE) for p in basis]
    size = len(idx)
    matrix = []
    for i, a in enumerate(basis):
        row = [2 * inner_product(a, b, WeightKind.PWEIGHT) for b in basis]
        matrix.append(row + [v[i]])
    matrix.append(v + [Fraction(0)])
    rhs = [Fraction(0)] * size + [ONE]
    try:
        sol = solve_exact(matrix, rhs)
    except ZeroDivisionError:
        raise SpanError(Polynomial()) from None
    coeffs = dict(zip(idx, sol[:size]))
    f = _combine(coeffs)
    return ExtremalSolution(idx, coeffs, inner_product(f, f, WeightKind.PWEIGHT), f)


def printed_minimum(n: int) -> Fraction:
    """2 / sum_{j=2}^n j(j-1)(2j-1)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return Fraction(2, sum(j * (j - 1) * (2 * j - 1) for j in range(2, n + 1)))


def printed_Fn(n: int) -> tuple[Polynomial, Fraction]:
    """The printed minimizer and minimum, summed over k = 2..n."""
    m = printed_minimum(n)
    f = Polynomial()
    for k in range(2, n + 1):
        f = f + polar(k) * Fraction(k * (k - 1) * (2 * k - 1), 2 * (k + 1))
    return f * m, m
