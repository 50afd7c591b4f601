"""Accuracy of the predict-the-most-frequent-outcome rule on a Bernoulli
process with success probability ``theta``.

``pi_k(theta)`` is the probability of correctly predicting trial k+1
after observing k trials, when the prediction is the outcome seen most
often so far (a fair coin flip on ties).  Five independent evaluation
routes are provided and must agree:

* ``accuracy_direct``     -- sum the piecewise per-count terms over n.
* ``accuracy_t_table``    -- dynamic program over weighted count cells.
* ``accuracy_recursive``  -- accumulate the plateau increments h_function.
* ``accuracy_condensed``  -- Catalan-series closed form.
* ``accuracy_expanded``   -- integer-coefficient polynomial form.

Arithmetic convention: exact inputs (``int``, ``Fraction``) produce exact
``Fraction`` results; ``float`` inputs produce floats.  The float results
agree with the exact ones to well under 1e-12 on the reference grid: the
direct/t-table/recursive/condensed routes are sums of non-negative terms,
and the expanded route (whose raw coefficients alternate and grow too
fast for float Horner to stay that accurate past k ~ 45) evaluates
exactly on the dyadic rational of the input before rounding once.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass
from typing import NamedTuple, Union

from .combinatorics import alpha_row, binomial, catalan_series

Theta = Union[int, float, Fraction]

__all__ = [
    "Theta",
    "PiPolynomial",
    "pi_polynomial",
    "bin_pmf",
    "per_step_accuracy",
    "h_function",
    "accuracy_direct",
    "accuracy_t_table",
    "t_table_accuracies",
    "accuracy_recursive",
    "accuracy_condensed",
    "accuracy_expanded",
    "ideal_accuracy",
    "accuracy_curve",
    "threshold_k",
    "CurvePoint",
]

HALF = Fraction(1, 2)


def _checked(theta: Theta) -> Theta:
    """Validate range and lift exact inputs (int) to Fraction."""
    if not 0 <= theta <= 1:
        raise ValueError(f"theta must lie in [0, 1], got {theta}")
    if isinstance(theta, int):
        return Fraction(theta)
    return theta


def _plateau_index(k: int) -> int:
    # k = 2a+1 and k = 2a+2 share one polynomial; a = ceil(k/2) - 1.
    return (k + 1) // 2 - 1


def bin_pmf(n: int, k: int, theta: Theta) -> Theta:
    """Binomial probability C(k, n) theta^n (1-theta)^(k-n)."""
    if not 0 <= n <= k:
        raise ValueError(f"bin_pmf requires 0 <= n <= k, got n={n}, k={k}")
    theta = _checked(theta)
    return binomial(k, n) * theta**n * (1 - theta) ** (k - n)


def per_step_accuracy(k: int, n: int, theta: Theta) -> Theta:
    """Chance of a correct prediction given k trials with n ones observed.

    1-theta when ones are in the minority, theta when in the majority,
    and exactly 1/2 on a tie.  k = 0 counts as a tie.
    """
    if k < 0 or not 0 <= n <= k:
        raise ValueError(f"invalid count statistic n={n}, k={k}")
    theta = _checked(theta)
    if 2 * n < k:
        return 1 - theta
    if 2 * n == k:
        return 0.5 if isinstance(theta, float) else HALF
    return theta


def h_function(a: int, theta: Theta) -> Theta:
    """Accuracy gained between consecutive odd/even plateau pairs.

    Computed as C(2a, a) * (theta(1-theta))^a * (1-2 theta)^2 / 2, which
    equals C(2a, a) * (x^a / 2 - 2 x^(a+1)) for x = theta(1-theta) since
    (1-2 theta)^2 = 1 - 4x, and is manifestly non-negative.
    """
    if a < 0:
        raise ValueError(f"h_function requires a >= 0, got a={a}")
    theta = _checked(theta)
    x = theta * (1 - theta)
    return binomial(2 * a, a) * x**a * (1 - 2 * theta) ** 2 / 2


def accuracy_direct(k: int, theta: Theta) -> Theta:
    """pi_k by direct summation of per-count correctness terms."""
    if k < 0:
        raise ValueError(f"trial count must be >= 0, got {k}")
    theta = _checked(theta)
    return sum(
        per_step_accuracy(k, n, theta) * bin_pmf(n, k, theta) for n in range(k + 1)
    )


def _t_next_row(row: list, k: int, theta: Theta) -> list:
    """One step of the weighted count-cell recursion, row k -> row k+1.

    Cell (k, n) feeds (k+1, n+1) with weight theta and (k+1, n) with
    weight 1-theta, except the tie cell n = k/2 which uses 2 theta^2 and
    2 (1-theta)^2: the doubled squares fold the even-odds tie prediction
    into the transition.
    """
    up = theta * theta * 2
    down = (1 - theta) * (1 - theta) * 2
    out = []
    for m in range(k + 2):
        acc = 0
        if 0 <= m - 1 <= k:
            acc += (up if 2 * (m - 1) == k else theta) * row[m - 1]
        if m <= k:
            acc += (down if 2 * m == k else 1 - theta) * row[m]
        out.append(acc)
    return out


def accuracy_t_table(k: int, theta: Theta) -> Theta:
    """pi_k via the count-cell dynamic program started from T(0,0) = 1/2."""
    if k < 0:
        raise ValueError(f"trial count must be >= 0, got {k}")
    theta = _checked(theta)
    row = [0.5 if isinstance(theta, float) else HALF]
    for j in range(k):
        row = _t_next_row(row, j, theta)
    return sum(row)


def t_table_accuracies(theta: Theta, k_max: int) -> list:
    """[pi_0, ..., pi_k_max] from a single table build (one pass, O(k_max^2))."""
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    theta = _checked(theta)
    row = [0.5 if isinstance(theta, float) else HALF]
    sums = [sum(row)]
    for j in range(k_max):
        row = _t_next_row(row, j, theta)
        sums.append(sum(row))
    return sums


def accuracy_recursive(k: int, theta: Theta) -> Theta:
    """pi_k as 1/2 plus the accumulated plateau increments."""
    if k < 0:
        raise ValueError(f"trial count must be >= 0, got {k}")
    theta = _checked(theta)
    base = 0.5 if isinstance(theta, float) else HALF
    if k == 0:
        return base
    return base + sum(h_function(i, theta) for i in range(_plateau_index(k) + 1))


def accuracy_condensed(k: int, theta: Theta) -> Theta:
    """pi_k in Catalan-series closed form (defined for k >= 1)."""
    if k < 1:
        raise ValueError(f"condensed form requires k >= 1, got {k}")
    theta = _checked(theta)
    a = _plateau_index(k)
    x = theta * (1 - theta)
    return 1 - catalan_series(x, a) - 2 * binomial(2 * a, a) * x ** (a + 1)


@dataclass(frozen=True)
class PiPolynomial:
    """Integer coefficients of pi_(2a+1) = pi_(2a+2) in the power basis.

    Layout: constant term, coefficient of theta, then ``tail[i]`` holding
    the coefficient of theta^(a+1+i).  For a >= 1 the powers between
    theta^1 and theta^(a+1) all vanish.
    """

    a: int
    constant: int
    linear: int
    tail: tuple[int, ...]

    def coefficients(self) -> tuple[int, ...]:
        """Dense coefficient vector, degree 2a+2, constant term first."""
        dense = [0] * (2 * self.a + 3)
        dense[0] = self.constant
        dense[1] += self.linear
        start = len(dense) - len(self.tail)  # tail always ends at theta^(2a+2)
        for i, c in enumerate(self.tail):
            dense[start + i] += c
        return tuple(dense)

    def evaluate(self, theta: Theta) -> Theta:
        """Evaluate by Horner's rule in exact arithmetic.

        Float inputs are exact dyadic rationals, so the alternating
        large coefficients cancel without rounding; the single rounding
        happens on the way back to float.
        """
        theta = _checked(theta)
        exact = Fraction(theta) if isinstance(theta, float) else theta
        acc = Fraction(0)
        for c in reversed(self.coefficients()):
            acc = acc * exact + c
        return float(acc) if isinstance(theta, float) else acc


def pi_polynomial(a: int) -> PiPolynomial:
    """Expanded accuracy polynomial for plateau index a."""
    if a < 0:
        raise ValueError(f"plateau index must be >= 0, got {a}")
    row = alpha_row(a)
    if a == 0:
        # the single alpha power theta^1 folds into the linear term
        return PiPolynomial(a=0, constant=1, linear=-1 - row[0], tail=(-row[1],))
    return PiPolynomial(a=a, constant=1, linear=-1, tail=tuple(-c for c in row))


def accuracy_expanded(k: int, theta: Theta) -> Theta:
    """pi_k via the integer-coefficient expanded polynomial (k >= 1)."""
    if k < 1:
        raise ValueError(f"expanded form requires k >= 1, got {k}")
    return pi_polynomial(_plateau_index(k)).evaluate(theta)


def ideal_accuracy(theta: Theta) -> Theta:
    """Limiting accuracy max(theta, 1-theta): prediction with theta known."""
    theta = _checked(theta)
    return max(theta, 1 - theta)


class CurvePoint(NamedTuple):
    k: int
    accuracy: Theta
    ideal: Theta
    gap: Theta


def accuracy_curve(theta: Theta, k_max: int) -> list[CurvePoint]:
    """Step-function profile (k, pi_k, ideal, ideal - pi_k) for k = 1..k_max.

    Accumulated exactly even for float input so the reported gap can
    never dip below zero once pi_k has converged to within float noise
    of its limit; floats are emitted when a float came in.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    theta = _checked(theta)
    as_float = isinstance(theta, float)
    exact = Fraction(theta) if as_float else theta
    ideal = max(exact, 1 - exact)
    pi = HALF
    points = []
    for k in range(1, k_max + 1):
        if k % 2 == 1:
            pi += h_function((k - 1) // 2, exact)
        gap = ideal - pi
        if as_float:
            points.append(CurvePoint(k, float(pi), float(ideal), float(gap)))
        else:
            points.append(CurvePoint(k, pi, ideal, gap))
    return points


def threshold_k(theta: Theta, target: Theta) -> int | None:
    """Smallest trial count k with pi_k(theta) >= target, or None.

    None means the target exceeds what the rule can ever reach: above
    max(theta, 1-theta), or exactly at it when that limit is approached
    but never attained (every non-degenerate theta other than 1/2).
    Any target <= 1/2 is met immediately at k = 0.  The scan walks
    plateau pairs, adding one exact increment per pair, so the first k
    that crosses the target is always odd.
    """
    theta = _checked(theta)
    if not 0 <= target <= 1:
        raise ValueError(f"target must lie in [0, 1], got {target}")
    if target <= HALF:
        return 0
    exact = Fraction(theta) if isinstance(theta, float) else theta
    ideal = max(exact, 1 - exact)
    if target > ideal:
        return None
    if target == ideal and exact not in (0, 1):
        return None  # supremum, approached but not attained
    pi = HALF
    a = 0
    while True:
        pi += h_function(a, exact)
        if pi >= target:
            return 2 * a + 1
        a += 1
