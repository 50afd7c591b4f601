"""Seeded Monte Carlo cross-check for the analytic accuracy results.

Simulates exchangeable binary processes, applies an arbitrary prediction
array, and reports per-step empirical accuracy with standard errors.

Reproducibility contract
------------------------
Every random draw is a pure function of ``(seed, replication, slot)``,
produced by a counter-based SplitMix64-style mixer.  Replication r's
substream uses fixed slot positions:

* slot 0                  -- inverse-CDF draw of theta (prior sources only)
* slots 1..horizon+1      -- the Bernoulli(theta) outcome sequence; the
                             prediction at step k is scored against the
                             outcome in slot 1+k
* slot horizon + 2 + k    -- prediction draw at step k (it decides the
                             prediction only when the array entry is
                             strictly between 0 and 1, i.e. one reserved
                             draw per tie step, in trial order)

Because nothing is sequential, reports are bit-identical for any chunk
size or degree of parallelism, and adding replications never perturbs
existing ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .prediction import PredictionArray, Prior

ThetaSource = Union[int, float, Fraction, Prior]

__all__ = [
    "SimulationConfig",
    "StepAccuracy",
    "SimulationReport",
    "CovarianceEstimate",
    "simulate_accuracy",
    "simulate_covariance",
]

DEFAULT_CHUNK = 1 << 18

_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_REP_STRIDE = np.uint64(0x9E3779B97F4A7C15)
_U53 = np.uint64(11)


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def _uniforms(seed: int, reps: np.ndarray, slot: int) -> np.ndarray:
    """U(0,1) draws for slot ``slot`` of each replication substream."""
    keys = _mix(np.uint64(seed) + reps * _REP_STRIDE)
    # slot offset wrapped in Python ints: numpy warns on scalar overflow
    offset = np.uint64((slot * 0xD1B54A32D192ED03) & 0xFFFFFFFFFFFFFFFF)
    bits = _mix(keys + offset)
    return (bits >> _U53) * 2.0**-53


@dataclass(frozen=True)
class SimulationConfig:
    """One simulation run: theta source, horizon, replication count, seed."""

    theta_source: ThetaSource
    horizon: int
    replications: int
    seed: int

    def __post_init__(self) -> None:
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")
        if self.replications < 1:
            raise ValueError(f"replications must be >= 1, got {self.replications}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if not isinstance(self.theta_source, Prior):
            if not 0 <= self.theta_source <= 1:
                raise ValueError(f"theta must lie in [0, 1], got {self.theta_source}")


@dataclass(frozen=True)
class StepAccuracy:
    """Empirical accuracy of the prediction made after k observed trials."""

    k: int
    hits: int
    trials: int
    estimate: float
    stderr: float


@dataclass(frozen=True)
class SimulationReport:
    steps: tuple[StepAccuracy, ...]

    def estimates(self) -> list[float]:
        return [s.estimate for s in self.steps]


def _draw_thetas(source: ThetaSource, seed: int, reps: np.ndarray) -> np.ndarray:
    if not isinstance(source, Prior):
        return np.full(reps.shape, float(source))
    u = _uniforms(seed, reps, 0)
    if source.kind == "beta":
        from scipy.special import betaincinv

        return betaincinv(float(source.alpha), float(source.beta), u)
    values = np.array([float(v) for v, _ in source.atoms])
    cumulative = np.cumsum([float(w) for _, w in source.atoms])
    cumulative[-1] = 1.0  # guard the top bin against float round-off
    return values[np.searchsorted(cumulative, u, side="right")]


def _phi_rows(array: PredictionArray, horizon: int) -> list[np.ndarray]:
    if array.k_max < horizon - 1:
        raise ValueError(
            f"prediction array covers rows 0..{array.k_max}, "
            f"but horizon {horizon} needs rows 0..{horizon - 1}"
        )
    return [np.array([float(p) for p in row]) for row in array.rows[:horizon]]


def simulate_accuracy(
    config: SimulationConfig,
    array: PredictionArray,
    chunk_size: int = DEFAULT_CHUNK,
) -> SimulationReport:
    """Empirical per-step accuracy of ``array`` under the configured process.

    Each replication draws theta (fixed value or one draw from the prior),
    then a Bernoulli(theta) outcome sequence.  At step k the prediction of
    trial k+1 is Bernoulli(phi[k, n_k]) with n_k the running count of ones,
    and a hit is recorded when prediction and outcome agree.  ``chunk_size``
    only bounds memory; it never changes the result.
    """
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be >= 1, got {chunk_size}")
    phi_rows = _phi_rows(array, config.horizon)
    hits = [0] * config.horizon
    total = config.replications
    for start in range(0, total, chunk_size):
        reps = np.arange(start, min(start + chunk_size, total), dtype=np.uint64)
        thetas = _draw_thetas(config.theta_source, config.seed, reps)
        counts = np.zeros(reps.shape, dtype=np.int64)
        for k in range(config.horizon):
            outcome = _uniforms(config.seed, reps, 1 + k) < thetas
            phi = phi_rows[k][counts]
            predicted = _uniforms(config.seed, reps, config.horizon + 2 + k) < phi
            hits[k] += int(np.count_nonzero(predicted == outcome))
            counts += outcome
    steps = []
    for k, h in enumerate(hits):
        estimate = h / total
        stderr = math.sqrt(estimate * (1.0 - estimate) / total)
        steps.append(StepAccuracy(k, h, total, estimate, stderr))
    return SimulationReport(tuple(steps))


@dataclass(frozen=True)
class CovarianceEstimate:
    """Sample covariance of two trial indicators, with its standard error."""

    estimate: float
    stderr: float
    replications: int


def simulate_covariance(
    prior: Prior,
    i: int,
    j: int,
    replications: int,
    seed: int,
    chunk_size: int = DEFAULT_CHUNK,
) -> CovarianceEstimate:
    """Sample cov(x_i, x_j) across replications that redraw theta each time.

    Each replication draws theta from the prior, then the two indicators
    independently given theta.  The estimate converges to the variance of
    theta under the prior; the reported standard error is the plug-in
    error of the mean cross-deviation term.
    """
    if i == j:
        raise ValueError("covariance requires two distinct trial indices")
    if replications < 2:
        raise ValueError(f"need at least 2 replications, got {replications}")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must fit in an unsigned 64-bit integer")
    sum_x = sum_y = sum_xy = 0
    for start in range(0, replications, chunk_size):
        reps = np.arange(start, min(start + chunk_size, replications), dtype=np.uint64)
        thetas = _draw_thetas(prior, seed, reps)
        x = _uniforms(seed, reps, 1) < thetas
        y = _uniforms(seed, reps, 2) < thetas
        sum_x += int(np.count_nonzero(x))
        sum_y += int(np.count_nonzero(y))
        sum_xy += int(np.count_nonzero(x & y))
    r = replications
    mean_x = sum_x / r
    mean_y = sum_y / r
    estimate = (sum_xy - r * mean_x * mean_y) / (r - 1)
    # indicators square to themselves, so Var of the cross-deviation term
    # needs only the three accumulated sums
    mean_t2 = (
        (1 - 2 * mean_x) * (1 - 2 * mean_y) * (sum_xy / r)
        + (1 - 2 * mean_x) * mean_y**2 * mean_x
        + mean_x**2 * (1 - 2 * mean_y) * mean_y
        + mean_x**2 * mean_y**2
    )
    variance_t = max(mean_t2 - estimate**2, 0.0)
    return CovarianceEstimate(estimate, math.sqrt(variance_t / r), replications)
