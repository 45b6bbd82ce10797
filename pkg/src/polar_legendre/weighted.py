"""Exact inner products under the singular weights on [-1, 1].

Each weight is ``numerator / denominator`` with polynomial parts. An inner
product is computed by dividing the weight's singular denominator out of
``a * b * numerator`` exactly and integrating the resulting polynomial; when
the division leaves a remainder the integrand is not a polynomial and
:class:`NotReducible` is raised instead of guessing a value.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Sequence

from .families import FamilyKind, family
from .poly import NotDivisible, Polynomial, definite_integral, divide_exact

__all__ = [
    "NotReducible",
    "WeightKind",
    "gram_matrix",
    "inner_product",
    "norm_squared",
    "weight_parts",
]


class NotReducible(ArithmeticError):
    """The weighted integrand does not reduce to a polynomial."""

    def __init__(self, weight: "WeightKind", remainder: Polynomial):
        self.weight = weight
        self.remainder = remainder
        super().__init__(
            f"integrand is not a polynomial under {weight.name} (remainder {remainder}); "
            "the integral may diverge"
        )


class WeightKind(enum.Enum):
    QWEIGHT = "q"               # 1/(1 - x^2)
    PWEIGHT = "p"               # (1 - x)/(1 + x)
    KERNEL_ZERO_WEIGHT = "k0"   # x(1 - x)/(1 + x)


_PARTS = {
    WeightKind.QWEIGHT: (Polynomial([1]), Polynomial([1, 0, -1])),
    WeightKind.PWEIGHT: (Polynomial([1, -1]), Polynomial([1, 1])),
    WeightKind.KERNEL_ZERO_WEIGHT: (Polynomial([0, 1, -1]), Polynomial([1, 1])),
}

FAMILY_WEIGHT = {FamilyKind.PIPCIR: WeightKind.QWEIGHT, FamilyKind.POLAR: WeightKind.PWEIGHT}


def weight_parts(w: WeightKind) -> tuple[Polynomial, Polynomial]:
    """(numerator, singular denominator) of the weight."""
    return _PARTS[w]


def reduce_integrand(a: Polynomial, b: Polynomial, w: WeightKind) -> Polynomial:
    num, den = _PARTS[w]
    try:
        return divide_exact(a * b * num, den)
    except NotDivisible as exc:
        raise NotReducible(w, exc.remainder) from None


def inner_product(a: Polynomial, b: Polynomial, w: WeightKind) -> Fraction:
    return definite_integral(reduce_integrand(a, b, w))


def norm_squared(kind: FamilyKind, n: int) -> Fraction:
    if kind not in FAMILY_WEIGHT:
        raise ValueError(f"no singular weight attached to {kind.value}")
    p = family(kind, n)
    return inner_product(p, p, FAMILY_WEIGHT[kind])


def gram_matrix(
    kind: FamilyKind,
    w: WeightKind,
    indices: Sequence[int],
    workers: int | None = None,
) -> list[list[Fraction | None]]:
    """Symmetric matrix of exact inner products.

    Entries whose integrand is not reducible are returned as ``None``; the
    rest of the matrix is still filled in.
    """
    polys = [family(kind, n) for n in indices]
    pairs = [(i, j) for i in range(len(polys)) for j in range(i, len(polys))]

    def entry(ij):
        i, j = ij
        try:
            return inner_product(polys[i], polys[j], w)
        except NotReducible:
            return None

    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            values = list(pool.map(entry, pairs))
    else:
        values = [entry(ij) for ij in pairs]
    size = len(polys)
    out: list[list[Fraction | None]] = [[None] * size for _ in range(size)]
    for (i, j), v in zip(pairs, values):
        out[i][j] = out[j][i] = v
    return out
