"""Relative frequencies drawn from predicted distributions"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from ..utils.random import create_generator, inverse_cdf_sample, prng_identifier
from .distribution import OutcomeDistribution

__all__ = [
    "FrequencyRecord",
    "sample_frequencies",
    "repeat_experiment",
    "sigma",
    "within_sigma",
]

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrequencyRecord:
    """Counts of each label over ``trials`` seeded draws."""

    trials: int
    counts: Dict[float, int]
    seed: int
    prng: str = field(default_factory=prng_identifier)

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be positive, but got {self.trials}.")
        if sum(self.counts.values()) != self.trials:
            raise ValueError(f"Counts sum to {sum(self.counts.values())}, expected {self.trials}.")

    def frequency(self, label):
        return self.counts.get(float(label), 0) / self.trials

    def frequencies(self):
        return {label: count / self.trials for label, count in self.counts.items()}


def sample_frequencies(dist: OutcomeDistribution, trials: int, seed: int, stream: int = 0) -> FrequencyRecord:
    """Draw ``trials`` i.i.d. results from ``dist`` by inverse-CDF over its labels."""
    if trials < 1:
        raise ValueError(f"trials must be positive, but got {trials}.")
    rng = create_generator(seed, stream)
    idx = inverse_cdf_sample(dist.probabilities, rng.random(trials))
    counts = np.bincount(idx, minlength=len(dist))
    _logger.debug("Sampled %d trials over %d outcomes (seed=%d, stream=%d)", trials, len(dist), seed, stream)
    return FrequencyRecord(
        trials=trials,
        counts={label: int(c) for label, c in zip(dist.labels, counts)},
        seed=seed,
    )


def repeat_experiment(dist: OutcomeDistribution, trials_per_run: int, runs: int, seed: int):
    """Counts of every label in each of ``runs`` independent series of ``trials_per_run`` draws.

    Returns:
        int array of shape ``(runs, len(dist))``.
    """
    if trials_per_run < 1 or runs < 1:
        raise ValueError(f"trials_per_run and runs must be positive, got {trials_per_run} and {runs}.")
    rng = create_generator(seed)
    idx = inverse_cdf_sample(dist.probabilities, rng.random((runs, trials_per_run)))
    counts = np.zeros((runs, len(dist)), dtype=np.int64)
    for k in range(len(dist)):
        counts[:, k] = np.count_nonzero(idx == k, axis=1)
    return counts


def sigma(p, n):
    """Standard deviation of a relative frequency with success probability ``p`` over ``n`` trials."""
    return math.sqrt(p * (1.0 - p) / n)


def within_sigma(freq, p, n, k=3.0):
    """|freq - p| <= k * sigma; degenerate p in {0, 1} demand an exact match."""
    return abs(freq - p) <= k * sigma(p, n) + 1e-12
