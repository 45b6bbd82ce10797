"""Exact scalars and combinatorial helpers.

Python ``int`` is already arbitrary precision and :class:`fractions.Fraction`
is always stored reduced with a positive denominator, so they serve directly
as the integer and rational types of the library.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

__all__ = [
    "Fraction",
    "as_fraction",
    "binomial",
    "double_factorial",
    "factorial",
    "format_rational",
    "parse_rational",
    "solve_exact",
]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact values")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a decimal literal into an exact Fraction."""
    return Fraction(text.strip())


def format_rational(value: Fraction | int) -> str:
    """Render as ``"p/q"``; integers keep the ``/1`` suffix for a stable schema."""
    value = as_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial undefined for {n}")
    return math.factorial(n)


def double_factorial(k: int) -> int:
    """k!! with the conventions 0!! = (-1)!! = 1."""
    if k < -1:
        raise ValueError(f"double factorial undefined for {k}")
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square linear system exactly.

    Rows are scaled to integers and reduced with Bareiss' fraction-free
    elimination, so every intermediate entry stays an integer.

    Raises ``ZeroDivisionError`` when the system is singular.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("matrix must be square and match the right-hand side")
    rows = []
    for row, b in zip(matrix, rhs):
        entries = [as_fraction(v) for v in row] + [as_fraction(b)]
        scale = math.lcm(*(e.denominator for e in entries))
        rows.append([int(e * scale) for e in entries])

    prev = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        rows[k], rows[pivot] = rows[pivot], rows[k]
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            rows[i] = [
                (pk * rows[i][j] - rik * rows[k][j]) // prev if j > k else 0
                for j in range(n + 1)
            ]
        prev = pk

    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return x
