"""Gauss-Legendre and tanh-sinh rules on (-1, 1) in mpmath precision.

Quadrature here is only a cross-check for integrals whose exact value is
known by other means, so the rules favour certainty over speed: Gauss nodes
start from exact Sturm isolating intervals and tanh-sinh runs at 50+ digits.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath
from mpmath import mp, mpf

from .families import legendre
from .poly import Interval, isolate_roots

__all__ = [
    "QuadratureError",
    "QuadratureRule",
    "RuleKind",
    "gauss_legendre_rule",
    "integrate",
    "tanh_sinh_rule",
    "to_mpf",
    "weighted_sum",
]

DEFAULT_DPS = 50


def to_mpf(q) -> mpf:
    """Exact rational to mpf at the current working precision."""
    q = Fraction(q)
    return mpf(q.numerator) / q.denominator


class QuadratureError(ArithmeticError):
    def __init__(self, message: str, estimate=None):
        self.estimate = estimate
        super().__init__(message)


class RuleKind(enum.Enum):
    GAUSS_LEGENDRE = "gauss-legendre"
    TANH_SINH = "tanh-sinh"


@dataclass(frozen=True)
class QuadratureRule:
    kind: RuleKind
    nodes: tuple
    weights: tuple
    order: int
    dps: int

    def coarse(self) -> "QuadratureRule":
        """Lower-accuracy companion used for the error estimate."""
        if self.kind is RuleKind.TANH_SINH:
            return tanh_sinh_rule(self.order - 1, self.dps)
        return gauss_legendre_rule(max(1, self.order - max(1, self.order // 4)), self.dps)

    def __len__(self) -> int:
        return len(self.nodes)


def _newton_in_bracket(p, dp, lo: mpf, hi: mpf, tol: mpf) -> mpf:
    x = (lo + hi) / 2
    for _ in range(200):
        fx = p(x)
        if fx == 0:
            return x
        step = fx / dp(x)
        nxt = x - step
        if not lo < nxt < hi:
            # Newton left the bracket; fall back to a bisection step
            if (p(lo) < 0) == (fx < 0):
                lo = x
            else:
                hi = x
            nxt = (lo + hi) / 2
        elif abs(step) < tol:
            return nxt
        x = nxt
    raise QuadratureError("Newton iteration did not converge", x)


@lru_cache(maxsize=None)
def gauss_legendre_rule(order: int, dps: int = DEFAULT_DPS) -> QuadratureRule:
    if order < 1:
        raise ValueError("order must be >= 1")
    L = legendre(order)
    dL = L.derivative()
    # nonnegative roots only; negatives follow by symmetry
    boxes = [iv for iv in isolate_roots(L, Interval(Fraction(-1, 2 ** 30), 1), Fraction(1, 2 ** 24))]
    with mp.workdps(dps + 15):
        p = L.eval_float
        dp = dL.eval_float
        tol = mpf(10) ** (-(dps + 10))
        pos = []
        for iv in boxes:
            if iv.lo < 0 < iv.hi and L(Fraction(0)) == 0:
                pos.append(mpf(0))
                continue
            pos.append(_newton_in_bracket(p, dp, to_mpf(iv.lo), to_mpf(iv.hi), tol))
        pos = [r for r in pos if r >= 0]
        nodes = sorted({*pos, *(-r for r in pos)})
        weights = [2 / ((1 - x * x) * dp(x) ** 2) for x in nodes]
    with mp.workdps(dps):
        nodes = tuple(+x for x in nodes)
        weights = tuple(+w for w in weights)
    if len(nodes) != order:
        raise QuadratureError(f"found {len(nodes)} nodes for order {order}")
    return QuadratureRule(RuleKind.GAUSS_LEGENDRE, nodes, weights, order, dps)


@lru_cache(maxsize=None)
def tanh_sinh_rule(level: int, dps: int = DEFAULT_DPS) -> QuadratureRule:
    """Double-exponential rule with step 2**-level."""
    if level < 0:
        raise ValueError("level must be >= 0")
    with mp.workdps(dps + 15):
        h = mpf(2) ** (-level)
        half_pi = mp.pi / 2
        cutoff = mpf(10) ** (-(dps + 5))
        # nodes closer than this to +-1 would round onto the endpoint
        min_gap = mpf(10) ** (-(dps - 5))
        nodes, weights = [mpf(0)], [h * half_pi]
        k = 1
        while True:
            t = k * h
            u = half_pi * mpmath.sinh(t)
            ch = mpmath.cosh(u)
            w = h * half_pi * mpmath.cosh(t) / (ch * ch)
            # 1 - tanh(u) computed without cancellation
            gap = 2 / (mpmath.exp(2 * u) + 1)
            if w < cutoff or gap < min_gap:
                break
            x = 1 - gap
            nodes = [-x] + nodes + [x]
            weights = [w] + weights + [w]
            k += 1
    with mp.workdps(dps):
        nodes = tuple(+x for x in nodes)
        weights = tuple(+w for w in weights)
    return QuadratureRule(RuleKind.TANH_SINH, nodes, weights, level, dps)


def weighted_sum(fn: Callable, rule: QuadratureRule):
    """Sum of w_i fn(x_i) at the rule's precision, returned as an mpf."""
    total = mpf(0)
    with mp.workdps(rule.dps):
        for x, w in zip(rule.nodes, rule.weights):
            v = fn(x)
            if not mpmath.isfinite(v):
                raise QuadratureError(f"integrand is not finite at node {mpmath.nstr(x, 20)}")
            total += w * v
    return total


def integrate(fn: Callable, rule: QuadratureRule) -> tuple[float, float]:
    """Integral over (-1, 1) and a level-difference error estimate."""
    fine = weighted_sum(fn, rule)
    coarse = weighted_sum(fn, rule.coarse()) if rule.order > 1 or rule.kind is RuleKind.TANH_SINH else fine
    with mp.workdps(rule.dps):
        err = abs(fine - coarse)
    return float(fine), float(err)
