"""Orthogonal systems x -> P_n(f(x)) for rational monotone bijections f."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from mpmath import mp, mpf

from .families import FamilyKind, polar
from .numeric import as_fraction
from .poly import Interval, Polynomial, X, gcd, isolate_roots, sturm_root_count
from .quadrature import QuadratureError, QuadratureRule, tanh_sinh_rule, to_mpf
from .weighted import norm_squared

__all__ = [
    "CertificationError",
    "MonotoneCertificate",
    "Orientation",
    "PushforwardWeight",
    "RationalMap",
    "certify_monotone_bijection",
    "composed_gram",
    "cubic_map",
    "identity_map",
    "mobius_map",
    "mobius_homogenized",
    "printed_cubic_weight",
    "pushforward_weight",
]


class Orientation(enum.Enum):
    AS_ORTHOGONALITY = "as-orthogonality"  # f' (1 - f)/(1 + f)
    AS_PRINTED = "as-printed"              # f' (1 + f)/(1 - f)


class CertificationError(ValueError):
    def __init__(self, problems: list[str], witness: Interval | None = None):
        self.problems = problems
        self.witness = witness
        super().__init__("; ".join(problems))


@dataclass(frozen=True)
class RationalMap:
    numerator: Polynomial
    denominator: Polynomial
    domain: Interval

    def __post_init__(self):
        if self.denominator.is_zero():
            raise ValueError("zero denominator")
        g = gcd(self.numerator, self.denominator)
        if g.degree > 0:
            raise ValueError(f"numerator and denominator share the factor {g}")
        d = self.denominator
        if d(self.domain.lo) == 0 or sturm_root_count(d, self.domain) > 0:
            raise ValueError("denominator vanishes on the domain")

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            x = as_fraction(x)
            return self.numerator(x) / self.denominator(x)
        return self.numerator.eval_float(x) / self.denominator.eval_float(x)

    def derivative(self) -> tuple[Polynomial, Polynomial]:
        """(numerator, denominator) of f' by the quotient rule."""
        n, d = self.numerator, self.denominator
        return n.derivative() * d - n * d.derivative(), d * d


def identity_map(domain: Interval = Interval(-1, 1)) -> RationalMap:
    return RationalMap(X, Polynomial([1]), domain)


def cubic_map() -> RationalMap:
    """f(x) = 4x^3 / (x^2 + 1)^2 on [-1, 1]."""
    return RationalMap(Polynomial([0, 0, 0, 4]), Polynomial([1, 0, 1]) ** 2, Interval(-1, 1))


def mobius_map(a, b, c, d, domain: Interval = Interval(-1, 1)) -> RationalMap:
    a, b, c, d = (as_fraction(v) for v in (a, b, c, d))
    if a * d - b * c == 0:
        raise ValueError("degenerate Mobius map (ad - bc = 0)")
    return RationalMap(Polynomial([b, a]), Polynomial([d, c]), domain)


def mobius_homogenized(p: Polynomial, a, b, c, d) -> Polynomial:
    """(cx + d)^n p((ax + b)/(cx + d)) with n = deg p, as a polynomial."""
    num, den = Polynomial([b, a]), Polynomial([d, c])
    n = p.degree
    return sum((num ** k * den ** (n - k) * ck for k, ck in enumerate(p.coeffs)), Polynomial())


@dataclass(frozen=True)
class MonotoneCertificate:
    map: RationalMap
    target: Interval
    derivative_numerator: Polynomial
    odd_multiplicity_part: Polynomial
    sample_point: Fraction


def _odd_multiplicity_part(p: Polynomial) -> Polynomial:
    """Product of the square-free factors that occur to an odd power (Yun)."""
    if p.degree < 1:
        return Polynomial([1])
    d1 = p.derivative()
    g = gcd(p, d1)
    b = p // g
    c = d1 // g
    out = Polynomial([1])
    i = 1
    while b.degree > 0:
        dd = c - b.derivative()
        a = gcd(b, dd)
        if i % 2 == 1:
            out = out * a
        b = b // a
        c = dd // a
        i += 1
    return out


def certify_monotone_bijection(f: RationalMap, target: Interval = Interval(-1, 1)) -> MonotoneCertificate:
    """Check f(lo) = target.lo, f(hi) = target.hi and f' >= 0 on the domain."""
    problems = []
    lo, hi = f.domain.lo, f.domain.hi
    if f(lo) != target.lo:
        problems.append(f"f({lo}) = {f(lo)} != {target.lo}")
    if f(hi) != target.hi:
        problems.append(f"f({hi}) = {f(hi)} != {target.hi}")
    num, _ = f.derivative()
    witness = None
    odd = _odd_multiplicity_part(num) if not num.is_zero() else Polynomial([1])
    if num.is_zero():
        problems.append("f is constant")
        sample = f.domain.mid
    else:
        # intervals are (a, b]; drop roots sitting exactly on an endpoint
        inner = [iv for iv in isolate_roots(odd, f.domain, f.domain.width / 2 ** 20)
                 if iv.hi > lo and (iv.hi < hi or odd(hi) != 0)]
        if inner:
            witness = inner[0]
            problems.append(f"f' changes sign near {float(witness.mid):.12g}")
        # find a rational point where f' is nonzero to read off its sign
        sample = f.domain.mid
        step = f.domain.width / 4
        while num(sample) == 0:
            sample = sample + step
            step /= 2
        if not inner and num(sample) < 0:
            problems.append("f is decreasing")
    if problems:
        raise CertificationError(problems, witness)
    return MonotoneCertificate(f, target, num, odd, sample)


@dataclass(frozen=True)
class PushforwardWeight:
    map: RationalMap
    orientation: Orientation
    numerator: Polynomial
    denominator: Polynomial

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            x = as_fraction(x)
            return self.numerator(x) / self.denominator(x)
        return self.numerator.eval_float(x) / self.denominator.eval_float(x)


def pushforward_weight(f: RationalMap, orientation: Orientation = Orientation.AS_ORTHOGONALITY) -> PushforwardWeight:
    """f' (1 -+ f)/(1 +- f) assembled as one ratio of polynomials."""
    dn, dd = f.derivative()
    n, d = f.numerator, f.denominator
    minus, plus = d - n, d + n  # (1 - f) d and (1 + f) d
    top, bottom = (minus, plus) if orientation is Orientation.AS_ORTHOGONALITY else (plus, minus)
    num, den = dn * top, dd * bottom
    g = gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    # keep the denominator monic so the representation is canonical
    lead = den.leading
    return PushforwardWeight(f, orientation, num / lead, den / lead)


def printed_cubic_weight() -> tuple[Polynomial, Polynomial]:
    """The cubic-map weight with the f' factor as printed:

    ((x^2+1)^2 + 4x^3)/((x^2+1)^2 - 4x^3) * (12x^2/(x^2+1)^2 - 4x/(x^2+1)^3).
    """
    s = Polynomial([1, 0, 1])
    c = Polynomial([0, 0, 0, 4])
    fprime_num = Polynomial([0, 0, 12]) * s - Polynomial([0, 4])
    return (s * s + c) * fprime_num, (s * s - c) * s ** 3


def composed_gram(
    f: RationalMap,
    orientation: Orientation = Orientation.AS_ORTHOGONALITY,
    max_n: int = 8,
    rule: QuadratureRule | None = None,
    start: int = 1,
    tol: float | None = 1e-10,
) -> list[list[float]]:
    """Numeric Gram matrix of {P_n o f : start <= n <= max_n} under the pushforward weight.

    The domain [a, b] is mapped affinely onto the rule's (-1, 1). When ``tol``
    is set, entries whose level-difference estimate exceeds it raise
    :class:`QuadratureError` carrying the achieved estimate.
    """
    if max_n < start:
        raise ValueError("max_n must be >= start")
    if rule is None:
        rule = tanh_sinh_rule(7)
    phi = pushforward_weight(f, orientation)
    indices = list(range(start, max_n + 1))
    polys = [polar(n) for n in indices]
    lo, hi = f.domain.lo, f.domain.hi

    def build(r: QuadratureRule):
        with mp.workdps(r.dps):
            mid = to_mpf((lo + hi) / 2)
            half = to_mpf((hi - lo) / 2)
            samples = []
            for s in r.nodes:
                x = mid + half * s
                t = f(x)
                samples.append(([p.eval_float(t) for p in polys], phi(x) * half))
        return samples

    def gram(r: QuadratureRule):
        samples = build(r)
        size = len(polys)
        out = [[mpf(0)] * size for _ in range(size)]
        with mp.workdps(r.dps):
            for (vals, wphi), w in zip(samples, r.weights):
                for i in range(size):
                    wi = w * wphi * vals[i]
                    for j in range(i, size):
                        out[i][j] += wi * vals[j]
        return out

    fine = gram(rule)
    size = len(polys)
    if tol is not None:
        coarse = gram(rule.coarse())
        with mp.workdps(rule.dps):
            for i in range(size):
                for j in range(i, size):
                    err = abs(fine[i][j] - coarse[i][j])
                    if err > tol:
                        raise QuadratureError(
                            f"entry ({indices[i]}, {indices[j]}) did not converge: "
                            f"estimate {float(fine[i][j])!r}, error {float(err):.3g}",
                            float(fine[i][j]),
                        )
    result = [[0.0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            result[i][j] = result[j][i] = float(fine[i][j])
    return result


def exact_diagonal(indices: Iterable[int]) -> list[Fraction]:
    return [norm_squared(FamilyKind.POLAR, n) for n in indices]
