"""Dense univariate polynomials over the rationals.

Coefficients are stored low-to-high (index ``i`` holds the coefficient of
``x**i``) with trailing zeros stripped, so two equal polynomials always have
equal coefficient tuples.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .numeric import as_fraction

__all__ = [
    "Interval",
    "NotDivisible",
    "Polynomial",
    "X",
    "antiderivative_vanishing_at",
    "definite_integral",
    "differentiate",
    "divide_exact",
    "evaluate",
    "isolate_roots",
    "square_free_part",
    "sturm_root_count",
    "sturm_sequence",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""

    def __init__(self, dividend: "Polynomial", divisor: "Polynomial", remainder: "Polynomial"):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide {dividend}: remainder {remainder}")


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _int_form(coeffs: Sequence[Fraction]) -> tuple[int, list[int]]:
    """Return ``(d, ints)`` with ``coeffs[i] == ints[i] / d``."""
    d = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return d, [c.numerator * (d // c.denominator) for c in coeffs]


class Polynomial:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip([as_fraction(c) for c in coeffs]))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, leading=1) -> "Polynomial":
        p = cls([leading])
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        # integer convolution avoids a gcd per partial product
        da, ia = _int_form(self.coeffs)
        db, ib = _int_form(other.coeffs)
        out = [0] * (len(ia) + len(ib) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        d = da * db
        return Polynomial([Fraction(c, d) for c in out])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / as_fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = as_fraction(c)
        return Polynomial([c * a for a in self.coeffs])

    def __divmod__(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # calculus and evaluation

    def __call__(self, x):
        """Horner evaluation; exact for rationals, works for any ring-like x."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x):
        """Horner evaluation with coefficients converted to x's numeric type."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + type(x)(c.numerator) / c.denominator
        return acc

    def derivative(self, order: int = 1) -> "Polynomial":
        p = self
        for _ in range(order):
            p = Polynomial([i * c for i, c in enumerate(p.coeffs) if i > 0])
        return p

    def integral(self) -> "Polynomial":
        """Antiderivative with zero constant term."""
        return Polynomial([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def compose(self, inner: "Polynomial") -> "Polynomial":
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def primitive_int(self) -> list[int]:
        """Integer coefficients of the primitive part with positive leading term."""
        _, ints = _int_form(self.coeffs)
        g = math.gcd(*ints) if ints else 1
        if not ints:
            return []
        sign = 1 if ints[-1] > 0 else -1
        return [sign * c // g for c in ints]

    def is_odd(self) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2 == 0)

    def is_even(self) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2 == 1)


X = Polynomial([0, 1])


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


UNIT = Interval(-1, 1)


def evaluate(p: Polynomial, x) -> Fraction:
    return p(as_fraction(x))


def differentiate(p: Polynomial) -> Polynomial:
    return p.derivative()


def antiderivative_vanishing_at(p: Polynomial, x0) -> Polynomial:
    F = p.integral()
    return F - F(as_fraction(x0))


def definite_integral(p: Polynomial, iv: Interval = UNIT) -> Fraction:
    F = p.integral()
    return F(iv.hi) - F(iv.lo)


def divide_exact(p: Polynomial, d: Polynomial) -> Polynomial:
    q, r = divmod(p, d)
    if not r.is_zero():
        raise NotDivisible(p, d, r)
    return q


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def square_free_part(p: Polynomial) -> Polynomial:
    if p.degree < 1:
        return p
    return divide_exact(p, gcd(p, p.derivative()))


# Sturm machinery on primitive integer coefficient lists.


def _int_deg(a: list[int]) -> int:
    return len(a) - 1


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b: lc(b)**(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = _int_deg(b)
    lb = b[-1]
    delta = _int_deg(a) - db + 1
    steps = 0
    while r and _int_deg(r) >= db:
        lr = r[-1]
        shift = _int_deg(r) - db
        r = [lb * c for c in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        while r and r[-1] == 0:
            r.pop()
        steps += 1
    # pad to the full power so the sign bookkeeping is uniform
    factor = lb ** (delta - steps) if delta > steps else 1
    return [factor * c for c in r]


def _primitive(a: list[int]) -> list[int]:
    g = math.gcd(*a)
    return [c // g for c in a] if g > 1 else a


def sturm_sequence(p: Polynomial) -> list[list[int]]:
    """Sturm chain of p as primitive integer polynomials.

    Each element differs from the classical chain by a positive factor,
    which leaves every sign pattern unchanged.
    """
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    chain = [p.primitive_int(), p.derivative().primitive_int()]
    if not chain[1]:
        return chain[:1]
    while True:
        a, b = chain[-2], chain[-1]
        if _int_deg(b) == 0:
            break
        r = _prem(a, b)
        if not r:
            break
        delta = _int_deg(a) - _int_deg(b) + 1
        # prem = lc(b)^delta * rem; strip the sign of that factor, then negate
        sign = -1 if (b[-1] < 0 and delta % 2 == 1) else 1
        r = _primitive([-sign * c for c in r])
        chain.append(r)
    return chain


def _sign_at(a: list[int], x: Fraction) -> int:
    # sign of sum a_i p^i q^(d-i), which has the sign of a(p/q) since q > 0
    p, q = x.numerator, x.denominator
    d = len(a) - 1
    acc = 0
    qp = 1
    pp = [1]
    for _ in range(d):
        pp.append(pp[-1] * p)
    for i in range(d, -1, -1):
        acc += a[i] * pp[i] * qp
        qp *= q
    return (acc > 0) - (acc < 0)


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(a, x) for a in chain) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_root_count(p: Polynomial, iv: Interval) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    chain = sturm_sequence(square_free_part(p))
    return _variations(chain, iv.lo) - _variations(chain, iv.hi)


def _refine_simple(f: list[int], a: Fraction, b: Fraction, width: Fraction) -> Interval:
    """Shrink (a, b] around its single simple root of f using signs of f only."""
    sb = _sign_at(f, b)
    while b - a > width:
        if sb == 0:
            return Interval(max(a, b - width), b)
        m = (a + b) / 2
        sm = _sign_at(f, m)
        if sm == 0:
            return Interval(max(a, m - width), m)
        if sm != sb:
            a = m
        else:
            b, sb = m, sm
    return Interval(a, b)


def isolate_roots(p: Polynomial, iv: Interval, width) -> list[Interval]:
    """Disjoint intervals, each holding exactly one root of p in [lo, hi].

    Every returned interval is read half-open as (lo, hi]; a root sitting
    exactly on ``iv.lo`` is reported as ``(iv.lo - width, iv.lo]``.
    """
    width = as_fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    sf = square_free_part(p)
    if sf.degree < 1:
        return []
    chain = sturm_sequence(sf)

    def count(a: Fraction, b: Fraction) -> int:
        return _variations(chain, a) - _variations(chain, b)

    out: list[Interval] = []
    if sf(iv.lo) == 0:
        out.append(Interval(iv.lo - width, iv.lo))
    stack = [(iv.lo, iv.hi, count(iv.lo, iv.hi))]
    found = []
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            found.append(_refine_simple(chain[0], a, b, width))
            continue
        m = (a + b) / 2
        stack.append((m, b, count(m, b)))
        stack.append((a, m, count(a, m)))
    found.sort(key=lambda i: i.lo)
    return out + found
