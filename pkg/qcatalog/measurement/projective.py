"""Projective measurement: collapse and seeded single-shot sampling"""
import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import ImpossibleOutcomeError
from ..hilbert.constants import TOL_ZERO
from ..hilbert.observables import Observable
from ..hilbert.operators import check_projector
from ..hilbert.states import StateVector, born_probability
from ..prediction.distribution import state_distribution
from ..utils.random import create_generator, inverse_cdf_sample

__all__ = ["MeasurementOutcome", "collapse", "sample_measurement"]

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasurementOutcome:
    eigenvalue: float
    probability: float
    post_state: StateVector

    def __post_init__(self):
        if not 0.0 <= self.probability <= 1.0:
            raise ValueError(f"probability must lie in [0, 1], but got {self.probability}.")


def collapse(state: StateVector, projector) -> StateVector:
    """P xi / ||P xi||; projects onto the whole eigenspace for degenerate results."""
    p = check_projector(projector, dim=state.dim)
    prob = born_probability(state, p)
    if prob <= TOL_ZERO:
        raise ImpossibleOutcomeError(f"impossible outcome: probability {prob:.3e} does not exceed {TOL_ZERO:.0e}.")
    projected = p @ state.amplitudes
    return StateVector(projected / np.linalg.norm(projected))


def sample_measurement(state: StateVector, obs: Observable, seed: int, stream: int = 0) -> MeasurementOutcome:
    """One measurement of ``obs``: a seeded draw of the result and the collapsed state."""
    dist = state_distribution(state, obs)
    rng = create_generator(seed, stream)
    k = int(inverse_cdf_sample(dist.probabilities, rng.random(1))[0])
    term = obs.spectrum[k]
    _logger.debug("Measured eigenvalue %.6g (p=%.6g, seed=%d)", term.eigenvalue, dist.probabilities[k], seed)
    return MeasurementOutcome(
        eigenvalue=term.eigenvalue,
        probability=dist.probabilities[k],
        post_state=collapse(state, term.projector),
    )
