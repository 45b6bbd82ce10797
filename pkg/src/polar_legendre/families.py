"""Legendre, PIPCIR and polar Legendre polynomials.

Each family has one canonical constructor:

* ``legendre`` -- the three-term recurrence,
* ``pipcir``   -- antiderivative of ``L_{n-1}`` vanishing at ``x = 1``,
* ``polar``    -- exact quotient of ``(n+1) Q_{n+1}`` by ``x - 1``.

Every other route (Rodrigues formulas, explicit sums, the binomial-square
expansion) is exposed separately so it can be compared against these.
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction

from .numeric import binomial, double_factorial, factorial
from .poly import Polynomial, X, antiderivative_vanishing_at, divide_exact

__all__ = [
    "FamilyKind",
    "SpecialValues",
    "cofactor",
    "diff3_residual",
    "legendre",
    "legendre_rodrigues",
    "min_index",
    "ode_residual",
    "pipcir",
    "pipcir_explicit",
    "pipcir_rodrigues",
    "polar",
    "polar_rodrigues",
    "recurrence_residual_pipcir",
    "second_identity_residual",
    "shifted_binomial_legendre",
    "special_values",
]

ONE_MINUS_X2 = Polynomial([1, 0, -1])
X2_MINUS_ONE = Polynomial([-1, 0, 1])


class FamilyKind(enum.Enum):
    LEGENDRE = "legendre"
    PIPCIR = "pipcir"
    POLAR = "polar"


_MIN_INDEX = {FamilyKind.LEGENDRE: 0, FamilyKind.PIPCIR: 2, FamilyKind.POLAR: 0}


def min_index(kind: FamilyKind) -> int:
    return _MIN_INDEX[kind]


def _check_index(kind: FamilyKind, n: int) -> None:
    if n < _MIN_INDEX[kind]:
        raise ValueError(f"{kind.value} polynomial undefined for n = {n}")


class _Table:
    """Grow-only memo table.

    Writers build the extended tuple under a lock and publish it with a
    single attribute store, so readers never observe a partial table.
    """

    def __init__(self, build):
        self._build = build
        self._items: tuple[Polynomial, ...] = ()
        self._lock = threading.Lock()

    def get(self, n: int) -> Polynomial:
        items = self._items
        if n < len(items):
            return items[n]
        with self._lock:
            items = list(self._items)
            while len(items) <= n:
                items.append(self._build(items, len(items)))
            self._items = tuple(items)
            return self._items[n]


def _next_legendre(items, n):
    if n == 0:
        return Polynomial([1])
    if n == 1:
        return X
    k = n - 1
    return (X * items[k] * (2 * k + 1) - items[k - 1] * k) / (k + 1)


_LEGENDRE = _Table(_next_legendre)


def legendre(n: int) -> Polynomial:
    _check_index(FamilyKind.LEGENDRE, n)
    return _LEGENDRE.get(n)


def _next_pipcir(items, n):
    # slots 0 and 1 are placeholders so that items[n] is Q_n
    if n < 2:
        return Polynomial()
    return antiderivative_vanishing_at(legendre(n - 1), 1)


_PIPCIR = _Table(_next_pipcir)


def pipcir(n: int) -> Polynomial:
    """Q_n = -int_x^1 L_{n-1}(t) dt."""
    _check_index(FamilyKind.PIPCIR, n)
    return _PIPCIR.get(n)


def _next_polar(items, n):
    if n == 0:
        return Polynomial([1])
    return divide_exact(pipcir(n + 1) * (n + 1), X - 1)


_POLAR = _Table(_next_polar)


def polar(n: int) -> Polynomial:
    """P_n with (n+1) Q_{n+1} = (x - 1) P_n; P_0 = 1 from the integral form."""
    _check_index(FamilyKind.POLAR, n)
    return _POLAR.get(n)


def family(kind: FamilyKind, n: int) -> Polynomial:
    return {FamilyKind.LEGENDRE: legendre, FamilyKind.PIPCIR: pipcir, FamilyKind.POLAR: polar}[kind](n)


def cofactor(n: int) -> Polynomial:
    """Interior factor q_{n-2} of Q_n = (x^2 - 1) q_{n-2}."""
    return divide_exact(pipcir(n), X2_MINUS_ONE)


# Alternate routes


def legendre_rodrigues(n: int) -> Polynomial:
    return (X2_MINUS_ONE ** n).derivative(n) / (2 ** n * factorial(n))


def shifted_binomial_legendre(n: int) -> Polynomial:
    if n < 0:
        raise ValueError("n must be >= 0")
    xm, xp = X - 1, X + 1
    total = Polynomial()
    for k in range(n + 1):
        total = total + (xm ** (n - k)) * (xp ** k) * (binomial(n, k) ** 2)
    return total / 2 ** n


def pipcir_explicit(n: int, denominator: str = "factorial") -> Polynomial:
    """Double-factorial sum for Q_n, summed over 0 <= 2k <= n.

    ``denominator="factorial"`` uses (n-2k)! in the denominator, which is the
    form that reproduces Q_n. ``denominator="double_factorial"`` uses
    (n-2k)!! literally, kept for auditing.
    """
    if n < 2:
        raise ValueError("explicit formula needs n >= 2")
    if denominator == "factorial":
        tail = factorial
    elif denominator == "double_factorial":
        tail = double_factorial
    else:
        raise ValueError(f"unknown denominator form {denominator!r}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        c = Fraction((-1) ** k * double_factorial(2 * n - 2 * k - 3),
                     double_factorial(2 * k) * tail(n - 2 * k))
        coeffs[n - 2 * k] = c
    return Polynomial(coeffs)


def pipcir_rodrigues(n: int) -> Polynomial:
    if n < 2:
        raise ValueError("Rodrigues formula for Q_n needs n >= 2")
    core = (X2_MINUS_ONE ** (n - 1)).derivative(n)
    return X2_MINUS_ONE * core / (2 ** (n - 1) * factorial(n) * (n - 1))


def polar_rodrigues(n: int) -> Polynomial:
    if n < 1:
        raise ValueError("Rodrigues formula for P_n needs n >= 1")
    core = (X2_MINUS_ONE ** n).derivative(n + 1)
    return (X + 1) * core / (2 ** n * factorial(n) * n)


# Special values


@dataclass(frozen=True)
class SpecialValues:
    value_at_plus1: Fraction
    value_at_minus1: Fraction
    value_at_0: Fraction
    deriv_at_plus1: Fraction
    deriv_at_0: Fraction
    second_deriv_at_plus1: Fraction


def special_values(kind: FamilyKind, n: int) -> SpecialValues:
    p = family(kind, n)
    d1 = p.derivative()
    d2 = d1.derivative()
    one = Fraction(1)
    return SpecialValues(
        value_at_plus1=p(one),
        value_at_minus1=p(-one),
        value_at_0=p(Fraction(0)),
        deriv_at_plus1=d1(one),
        deriv_at_0=d1(Fraction(0)),
        second_deriv_at_plus1=d2(one),
    )


# Residuals; each is the zero polynomial when the identity holds


def ode_residual(kind: FamilyKind, n: int) -> Polynomial:
    p = family(kind, n)
    d1 = p.derivative()
    d2 = d1.derivative()
    if kind is FamilyKind.LEGENDRE:
        return (ONE_MINUS_X2 * d1).derivative() + p * (n * (n + 1))
    if kind is FamilyKind.PIPCIR:
        return ONE_MINUS_X2 * d2 + p * (n * (n - 1))
    return X2_MINUS_ONE * d2 + (X + 1) * d1 * 2 - p * (n * (n + 1))


def diff3_residual(n: int) -> Polynomial:
    """(1 - x^2) Q''' - 2x Q'' + n(n-1) Q'."""
    q1 = pipcir(n).derivative()
    q2 = q1.derivative()
    q3 = q2.derivative()
    return ONE_MINUS_X2 * q3 - X * q2 * 2 + q1 * (n * (n - 1))


def recurrence_residual_pipcir(n: int) -> tuple[Polynomial, Polynomial]:
    """Residuals of Q'_n = (Q''_{n+1} - Q''_{n-1})/(2n-1) and its integrated form.

    The integrated form fixes the antiderivative of Q_n to vanish at x = 1,
    where Q_{n+1} - Q_{n-1} vanishes too.
    """
    if n < 3:
        raise ValueError("recurrence needs n >= 3")
    hi, lo = pipcir(n + 1), pipcir(n - 1)
    first = pipcir(n).derivative() - (hi.derivative(2) - lo.derivative(2)) / (2 * n - 1)
    second = antiderivative_vanishing_at(pipcir(n), 1) - (hi - lo) / (2 * n - 1)
    return first, second


def second_identity_residual(n: int) -> Polynomial:
    """(x^2-1) [(x^2-1)^{n-1}]^{(n)} - n(n-1) [(x^2-1)^{n-1}]^{(n-2)}."""
    if n < 2:
        raise ValueError("identity needs n >= 2")
    base = X2_MINUS_ONE ** (n - 1)
    return X2_MINUS_ONE * base.derivative(n) - base.derivative(n - 2) * (n * (n - 1))
