"""Exact integer and rational building blocks: binomial coefficients,
Catalan numbers, and the signed coefficient algebra behind the expanded
accuracy polynomials.

All functions return exact Python integers or ``fractions.Fraction``
values; nothing here ever rounds.  ``Fraction`` (aliased ``ExactRational``)
is the canonical carrier for exact probabilities throughout the package:
it keeps gcd-reduced numerator/denominator pairs with a positive
denominator, which is exactly the invariant the rest of the code relies
on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, sqrt

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "CoefficientTable",
    "binomial",
    "catalan",
    "catalan_gf",
    "catalan_series",
    "w_coefficient",
    "alpha_coefficient",
    "alpha_row",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero-extended to 0 for k < 0 or k > n.

    The zero extension lets coefficient sums run over unrestricted index
    ranges without boundary special cases.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """The n-th Catalan number C_n = C(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError(f"catalan requires n >= 0, got n={n}")
    # comb builds the value multiplicatively; the division is exact.
    return comb(2 * n, n) // (n + 1)


def w_coefficient(i: int, j: int) -> int:
    """Signed binomial-Catalan product W(i, j) = (-1)^j C(i, j) C_{i-1}.

    Zero outside 0 <= j <= i.  These are the coefficients produced by
    expanding C_{i-1} (1 - t)^i with the binomial theorem, and they obey
    the diagonal identity sum_{i<=t} W(i, t-i) = 1 iff t = 1, else 0.
    """
    if i < 1:
        raise ValueError(f"w_coefficient requires i >= 1, got i={i}")
    if j < 0 or j > i:
        return 0
    sign = -1 if j % 2 else 1
    return sign * comb(i, j) * catalan(i - 1)


@lru_cache(maxsize=None)
def alpha_row(a: int) -> tuple[int, ...]:
    """All a+2 expanded-polynomial coefficients for plateau index ``a``.

    Entry t (1-based) is the coefficient attached to the power a+t:

        alpha(a, t) = sum_{i=1..a} W(i, a+t-i) + 2(a+1) W(a+1, t-1),

    with 1 subtracted at (a=0, t=1) so that the polynomial keeps the
    uniform ``1 - t - sum alpha`` layout for every a.  Each row satisfies
    sum_t alpha(a, t) = -1, forced by the polynomial equalling 1 at t=1.

    Note on the classical tabulation: the entry at (a=5, t=1) is often
    printed as 426, which breaks the row-sum identity (that row then sums
    to -37).  The sum above gives 462 -- a digit transposition away --
    and 462 also matches the cross-check alpha(a, 1) = C(2a+1, a).
    """
    if a < 0:
        raise ValueError(f"alpha_row requires a >= 0, got a={a}")
    row = []
    for t in range(1, a + 3):
        total = sum(w_coefficient(i, a + t - i) for i in range(1, a + 1))
        total += 2 * (a + 1) * w_coefficient(a + 1, t - 1)
        if a == 0 and t == 1:
            total -= 1
        row.append(total)
    return tuple(row)


def alpha_coefficient(a: int, t: int) -> int:
    """Coefficient of the power a+t in the expanded accuracy polynomial."""
    if a < 0:
        raise ValueError(f"alpha_coefficient requires a >= 0, got a={a}")
    if not 1 <= t <= a + 2:
        raise ValueError(
            f"alpha_coefficient index t must be in 1..{a + 2}, got t={t}"
        )
    return alpha_row(a)[t - 1]


@dataclass(frozen=True)
class CoefficientTable:
    """Rows of expanded-polynomial coefficients, keyed by plateau index a."""

    rows: dict[int, tuple[int, ...]]

    def __post_init__(self) -> None:
        for a, row in self.rows.items():
            if len(row) != a + 2:
                raise ValueError(f"row {a} must have {a + 2} entries, got {len(row)}")
            if sum(row) != -1:
                raise ValueError(f"row {a} violates the row-sum identity: {sum(row)}")

    @classmethod
    def up_to(cls, a_max: int) -> "CoefficientTable":
        """Build (and cache, via alpha_row) all rows for a = 0..a_max."""
        if a_max < 0:
            raise ValueError(f"a_max must be >= 0, got {a_max}")
        return cls({a: alpha_row(a) for a in range(a_max + 1)})

    def row(self, a: int) -> tuple[int, ...]:
        return self.rows[a]


def catalan_gf(z: float | Fraction | int) -> float:
    """Catalan generating function G(z) = 2 / (1 + sqrt(1 - 4z)) on [0, 1/4]."""
    if not 0 <= z <= Fraction(1, 4):
        raise ValueError(f"catalan_gf requires 0 <= z <= 1/4, got {z}")
    return 2.0 / (1.0 + sqrt(float(1 - 4 * z)))


def catalan_series(x: float | Fraction, terms: int) -> float | Fraction:
    """Partial sum  sum_{i=1..terms} C_{i-1} x^i  of the Catalan series.

    Terms are built by the ratio recurrence C_i / C_{i-1} = 2(2i-1)/(i+1),
    so float inputs never touch the (astronomically large) raw Catalan
    integers and exact inputs stay exact.  For 0 <= x <= 1/4 the partial
    sums increase towards x * G(x).
    """
    if terms < 0:
        raise ValueError(f"terms must be >= 0, got {terms}")
    total = x - x  # zero of the same numeric type
    term = x  # C_0 * x^1
    for i in range(1, terms + 1):
        total += term
        if isinstance(term, Fraction):
            term *= x * Fraction(2 * (2 * i - 1), i + 1)
        else:
            term *= x * (2.0 * (2 * i - 1) / (i + 1))
    return total
