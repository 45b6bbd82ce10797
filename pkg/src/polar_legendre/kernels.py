"""Reproducing kernels of the polar Legendre family under (1 - x)/(1 + x)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .families import FamilyKind, polar
from .numeric import as_fraction, solve_exact
from .poly import Polynomial, definite_integral
from .weighted import WeightKind, inner_product, norm_squared, reduce_integrand

__all__ = [
    "KernelSpec",
    "SpanError",
    "christoffel_darboux",
    "christoffel_darboux_verbatim",
    "expand_in_span",
    "kernel_in_x",
    "kernel_value",
    "kernel_zero_gram",
    "reproduce",
]


class SpanError(ValueError):
    """A polynomial is not in the span of the kernel's basis."""

    def __init__(self, residual: Polynomial):
        self.residual = residual
        super().__init__(f"polynomial lies outside the span; residual component {residual}")


@dataclass(frozen=True)
class KernelSpec:
    indices: tuple[int, ...] = field(default=())
    family: FamilyKind = FamilyKind.POLAR
    weight: WeightKind = WeightKind.PWEIGHT

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        if any(k < 1 for k in idx):
            # P_0 has no finite norm under (1 - x)/(1 + x)
            raise ValueError("kernel indices must be >= 1")
        if self.family is not FamilyKind.POLAR or self.weight is not WeightKind.PWEIGHT:
            raise ValueError("kernels are defined for the polar family under PWEIGHT")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def upto(cls, n: int, start: int = 1) -> "KernelSpec":
        return cls(tuple(range(start, n + 1)))

    def is_contiguous(self) -> bool:
        idx = self.indices
        return bool(idx) and idx == tuple(range(idx[0], idx[-1] + 1))


def kernel_in_x(spec: KernelSpec, y) -> Polynomial:
    y = as_fraction(y)
    total = Polynomial()
    for k in spec.indices:
        p = polar(k)
        total = total + p * (p(y) / norm_squared(FamilyKind.POLAR, k))
    return total


def kernel_value(spec: KernelSpec, x, y) -> Fraction:
    return kernel_in_x(spec, y)(as_fraction(x))


def _leading_ratio(n: int) -> Fraction:
    return polar(n).leading / polar(n + 1).leading


def christoffel_darboux(spec: KernelSpec, x, y) -> Fraction:
    """Closed ratio form of the kernel over {1..n}.

    For ``x == y`` the confluent form with exact derivatives is used.
    """
    if not spec.is_contiguous() or spec.indices[0] != 1:
        raise ValueError("Christoffel-Darboux needs indices {1..n}")
    x, y = as_fraction(x), as_fraction(y)
    n = spec.indices[-1]
    pn, pn1 = polar(n), polar(n + 1)
    scale = _leading_ratio(n) / norm_squared(FamilyKind.POLAR, n)
    if x == y:
        return scale * (pn1.derivative()(x) * pn(x) - pn1(x) * pn.derivative()(x))
    return scale * (pn1(x) * pn(y) - pn1(y) * pn(x)) / (x - y)


def christoffel_darboux_verbatim(n: int, x, y) -> Fraction:
    """Ratio form without the leading-coefficient factor."""
    x, y = as_fraction(x), as_fraction(y)
    pn, pn1 = polar(n), polar(n + 1)
    h = norm_squared(FamilyKind.POLAR, n)
    if x == y:
        return (pn1.derivative()(x) * pn(x) - pn1(x) * pn.derivative()(x)) / h
    return (pn1(x) * pn(y) - pn1(y) * pn(x)) / ((x - y) * h)


def expand_in_span(f: Polynomial, indices: Sequence[int]) -> dict[int, Fraction]:
    """Coefficients of f over {P_k : k in indices} from an exact Gram solve."""
    basis = [polar(k) for k in indices]
    if not basis:
        if f.is_zero():
            return {}
        raise SpanError(f)
    gram = [[inner_product(a, b, WeightKind.PWEIGHT) for b in basis] for a in basis]
    try:
        rhs = [inner_product(a, f, WeightKind.PWEIGHT) for a in basis]
    except ArithmeticError:
        raise SpanError(f) from None
    coeffs = solve_exact(gram, rhs)
    residual = f - sum((b * c for b, c in zip(basis, coeffs)), Polynomial())
    if not residual.is_zero():
        raise SpanError(residual)
    return dict(zip(indices, coeffs))


def reproduce(f: Polynomial, spec: KernelSpec) -> Polynomial:
    """Integrate K(x, t) f(t) (1-t)/(1+t) dt over t exactly.

    The kernel is expanded as sum_i x^i c_i(t) and each coefficient
    c_i(t) is integrated against f separately.
    """
    expand_in_span(f, spec.indices)
    columns: dict[int, Polynomial] = {}
    for k in spec.indices:
        p = polar(k)
        h = norm_squared(FamilyKind.POLAR, k)
        for i, c in enumerate(p.coeffs):
            if c:
                columns[i] = columns.get(i, Polynomial()) + p * (c / h)
    out = [Fraction(0)] * (max(columns, default=-1) + 1)
    for i, ct in columns.items():
        out[i] = definite_integral(reduce_integrand(ct, f, WeightKind.PWEIGHT))
    return Polynomial(out)


def kernel_zero_gram(max_n: int, start: int = 1) -> list[list[Fraction]]:
    """Gram matrix of K_n(x, 0), n = start..max_n, under x(1-x)/(1+x)."""
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    ks = [kernel_in_x(KernelSpec.upto(n, start), 0) for n in range(start, max_n + 1)]
    return [[inner_product(a, b, WeightKind.KERNEL_ZERO_WEIGHT) for b in ks] for a in ks]
