"""Prediction arrays and Bayesian posterior prediction for exchangeable
binary sequences.

A prediction method is a triangular array of probabilities: entry (k, n)
is the chance of predicting outcome 1 after seeing n ones in k trials.
This module builds the most-frequent-outcome array, scores arrays against
a known success probability, and computes posterior quantities under beta
or discrete priors on that probability.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .accuracy import Theta, bin_pmf

Weight = Union[int, float, Fraction]

__all__ = [
    "PredictionArray",
    "CountStatistic",
    "Prior",
    "ImpossibleEvidenceError",
    "beta_prior",
    "discrete_prior",
    "frequent_outcome_array",
    "conditional_accuracy",
    "posterior_mean",
    "posterior_correct_probability",
    "optimal_array",
    "prior_covariance",
]

HALF = Fraction(1, 2)

# float posterior means this close to 1/2 count as exact ties
FLOAT_TIE_TOLERANCE = 1e-14


class ImpossibleEvidenceError(ValueError):
    """The observed count has zero likelihood under every prior atom."""


def _check_probability(value, name: str) -> None:
    if not 0 <= value <= 1:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


@dataclass(frozen=True)
class CountStatistic:
    """Sufficient statistic for the binomial model: k trials, n ones."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 0 or not 0 <= self.n <= self.k:
            raise ValueError(f"need 0 <= n <= k, got n={self.n}, k={self.k}")


@dataclass(frozen=True)
class PredictionArray:
    """Triangular array of predict-one probabilities, row k has k+1 entries."""

    rows: tuple[tuple[Weight, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        for k, row in enumerate(rows):
            if len(row) != k + 1:
                raise ValueError(f"row {k} must have {k + 1} entries, got {len(row)}")
            for phi in row:
                _check_probability(phi, f"entry in row {k}")

    @property
    def k_max(self) -> int:
        return len(self.rows) - 1

    def phi(self, k: int, n: int) -> Weight:
        return self.rows[k][n]


def frequent_outcome_array(k_max: int) -> PredictionArray:
    """Predict the outcome observed most often; flip a fair coin on ties.

    Row 0 (nothing observed yet) is the single tie entry 1/2.
    """
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    rows = []
    for k in range(k_max + 1):
        rows.append(
            tuple(
                Fraction(0) if 2 * n < k else (HALF if 2 * n == k else Fraction(1))
                for n in range(k + 1)
            )
        )
    return PredictionArray(tuple(rows))


def conditional_accuracy(phi: Weight, theta: Theta) -> Weight:
    """P(prediction correct | theta) = (1-theta)(1-phi) + theta*phi.

    Affine in theta with slope 2*phi - 1: predicting one with certainty
    scores theta, predicting zero scores 1-theta, and phi = 1/2 scores
    1/2 no matter the bias.
    """
    _check_probability(phi, "phi")
    _check_probability(theta, "theta")
    return (1 - theta) * (1 - phi) + theta * phi


@dataclass(frozen=True)
class Prior:
    """Distribution of the long-run success proportion.

    Either a beta(alpha, beta) density or a finite set of weighted atoms.
    Use :func:`beta_prior` / :func:`discrete_prior` to construct.
    """

    kind: str
    alpha: Weight | None = None
    beta: Weight | None = None
    atoms: tuple[tuple[Theta, Weight], ...] | None = None

    def __post_init__(self) -> None:
        if self.kind == "beta":
            if self.alpha is None or self.beta is None or self.atoms is not None:
                raise ValueError("beta prior takes alpha and beta only")
            if not (self.alpha > 0 and self.beta > 0):
                raise ValueError(
                    f"beta parameters must be positive, got ({self.alpha}, {self.beta})"
                )
        elif self.kind == "discrete":
            if self.atoms is None or self.alpha is not None or self.beta is not None:
                raise ValueError("discrete prior takes atoms only")
            if not self.atoms:
                raise ValueError("discrete prior needs at least one atom")
            for value, weight in self.atoms:
                _check_probability(value, "atom location")
                if weight < 0:
                    raise ValueError(f"atom weight must be >= 0, got {weight}")
            total = sum(weight for _, weight in self.atoms)
            if isinstance(total, (int, Fraction)):
                if total != 1:
                    raise ValueError(f"atom weights must sum to 1, got {total}")
            elif abs(total - 1.0) > 1e-12:
                raise ValueError(f"atom weights must sum to 1, got {total}")
        else:
            raise ValueError(f"unknown prior kind {self.kind!r}")

    @property
    def is_symmetric(self) -> bool:
        """Invariant under theta -> 1 - theta."""
        if self.kind == "beta":
            return self.alpha == self.beta
        merged: dict = {}
        for value, weight in self.atoms:
            merged[value] = merged.get(value, 0) + weight
        return merged == {1 - v: w for v, w in merged.items()}

    @property
    def is_almost_uniform(self) -> bool:
        """Symmetric with positive mass off 1/2."""
        if self.kind == "beta":
            return self.is_symmetric
        off_center = any(w > 0 and v != HALF for v, w in self.atoms)
        return self.is_symmetric and off_center

    def mean(self) -> Weight:
        if self.kind == "beta":
            return self.alpha / (self.alpha + self.beta)
        return sum(v * w for v, w in self.atoms)


def beta_prior(alpha: Weight, beta: Weight) -> Prior:
    """Conjugate beta(alpha, beta) prior; exact with Fraction parameters."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    if isinstance(beta, int):
        beta = Fraction(beta)
    return Prior(kind="beta", alpha=alpha, beta=beta)


def discrete_prior(atoms) -> Prior:
    """Finitely supported prior from (value, weight) pairs."""
    return Prior(kind="discrete", atoms=tuple((v, w) for v, w in atoms))


def posterior_mean(prior: Prior, stat: CountStatistic) -> Weight:
    """E[theta | n ones in k trials] under the prior.

    Beta priors use the conjugate closed form (alpha + n)/(alpha + beta + k);
    discrete priors take the likelihood-weighted atom average.
    """
    if prior.kind == "beta":
        return (prior.alpha + stat.n) / (prior.alpha + prior.beta + stat.k)
    weighted = [
        (value, weight * bin_pmf(stat.n, stat.k, value))
        for value, weight in prior.atoms
    ]
    marginal = sum(w for _, w in weighted)
    if marginal == 0:
        raise ImpossibleEvidenceError(
            f"count n={stat.n}, k={stat.k} has zero probability under the prior"
        )
    return sum(v * w for v, w in weighted) / marginal


def posterior_correct_probability(
    phi: Weight, prior: Prior, stat: CountStatistic
) -> Weight:
    """P(prediction correct | observed count) for predict-one probability phi.

    Because the conditional accuracy is affine in theta, the posterior
    expectation is just the conditional accuracy at the posterior mean.
    """
    return conditional_accuracy(phi, posterior_mean(prior, stat))


def _tie(mean: Weight) -> bool:
    if isinstance(mean, float):
        return abs(mean - 0.5) <= FLOAT_TIE_TOLERANCE
    return mean == HALF


def optimal_array(prior: Prior, k_max: int) -> PredictionArray:
    """Bayes-optimal array: back whichever outcome the posterior favours.

    Entry (k, n) is 1 when the posterior mean exceeds 1/2, 0 when below,
    and 1/2 at an exact tie.  For symmetric non-degenerate priors this
    reproduces :func:`frequent_outcome_array` entry for entry.
    """
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    rows = []
    for k in range(k_max + 1):
        row = []
        for n in range(k + 1):
            mean = posterior_mean(prior, CountStatistic(k, n))
            if _tie(mean):
                row.append(HALF)
            elif mean > HALF:
                row.append(Fraction(1))
            else:
                row.append(Fraction(0))
        rows.append(tuple(row))
    return PredictionArray(tuple(rows))


def prior_covariance(prior: Prior) -> Weight:
    """cov(x_i, x_j) for i != j: the variance of theta under the prior.

    Exchangeable indicators can never be negatively correlated; this is
    the (non-negative) common covariance of any two distinct trials.
    """
    if prior.kind == "beta":
        a, b = prior.alpha, prior.beta
        return (a * b) / ((a + b) ** 2 * (a + b + 1))
    mean = prior.mean()
    second = sum(v * v * w for v, w in prior.atoms)
    return second - mean * mean
