"""The two descriptions of a measurement: the pre-measurement compound state and the mixture"""
import numpy as np

from ..exceptions import DimensionMismatchError
from ..hilbert.constants import TOL_NORM, TOL_ZERO
from ..hilbert.observables import Observable
from ..hilbert.states import StateVector
from .density import DensityOperator, partial_trace

__all__ = [
    "von_neumann_mixture",
    "premeasurement_unitary",
    "premeasurement",
    "interference_norm",
    "agreement_residual",
]


def _check_dims(state, obs):
    if state.dim != obs.dim:
        raise DimensionMismatchError(f"Dimension mismatch: state {state.dim} vs observable {obs.dim}.")


def von_neumann_mixture(state: StateVector, obs: Observable) -> DensityOperator:
    """U' = sum_k P_k |xi><xi| P_k, the probability-weighted mixture of the collapsed states.

    For a nondegenerate spectrum this is sum_n |(xi, phi_n)|^2 P[phi_n].
    """
    _check_dims(state, obs)
    xi = state.amplitudes
    rho = np.zeros((obs.dim, obs.dim), dtype=np.complex128)
    for term in obs.spectrum:
        projected = term.projector @ xi
        if np.vdot(projected, projected).real > TOL_ZERO:
            rho += np.outer(projected, projected.conj())
    return DensityOperator(rho)


def _ready_index(apparatus_ready: StateVector):
    amps = np.abs(apparatus_ready.amplitudes)
    k = int(np.argmax(amps))
    if abs(amps[k] - 1.0) > TOL_NORM:
        raise ValueError("The apparatus ready state must be a canonical basis vector (up to phase).")
    return k


def premeasurement_unitary(obs: Observable, apparatus_dim: int, ready_index: int = 0):
    """Unitary on S&A that writes the eigenspace index k into pointer state a_k.

    U = sum_k P_k (x) S_k, where S_k swaps the ready state with a_k (the k-th canonical basis vector).
    """
    n = len(obs)
    if apparatus_dim < n:
        raise ValueError(f"Apparatus dimension {apparatus_dim} is too small for {n} possible readings.")
    if not 0 <= ready_index < apparatus_dim:
        raise ValueError(f"ready_index {ready_index} out of range for apparatus dimension {apparatus_dim}.")
    unitary = np.zeros((obs.dim * apparatus_dim,) * 2, dtype=np.complex128)
    for k, term in enumerate(obs.spectrum):
        perm = np.arange(apparatus_dim)
        perm[[ready_index, k]] = perm[[k, ready_index]]
        swap = np.eye(apparatus_dim)[perm]
        unitary += np.kron(term.projector, swap)
    return unitary


def premeasurement(system: StateVector, obs: Observable, apparatus_ready: StateVector) -> StateVector:
    """Compound state sum_k (P_k xi) (x) a_k after the measuring interaction."""
    _check_dims(system, obs)
    ready = _ready_index(apparatus_ready)
    unitary = premeasurement_unitary(obs, apparatus_ready.dim, ready)
    return StateVector(unitary @ np.kron(system.amplitudes, apparatus_ready.amplitudes))


def interference_norm(rho: DensityOperator, obs: Observable) -> float:
    """sum_{j != k} ||P_j rho P_k||_F^2, the weight of the interference terms in the eigenbasis of ``obs``."""
    if rho.dim != obs.dim:
        raise DimensionMismatchError(f"Dimension mismatch: density {rho.dim} vs observable {obs.dim}.")
    total = 0.0
    for j, pj in enumerate(obs.projectors):
        for k, pk in enumerate(obs.projectors):
            if j != k:
                block = pj @ rho.matrix @ pk
                total += float(np.sum(np.abs(block) ** 2))
    return total


def agreement_residual(state: StateVector, obs: Observable, apparatus_dim=None) -> float:
    """Max-norm gap between the system's reduced pre-measurement state and the mixture U'."""
    apparatus_dim = len(obs) if apparatus_dim is None else apparatus_dim
    compound = premeasurement(state, obs, StateVector.basis(apparatus_dim, 0))
    reduced = partial_trace(DensityOperator.from_state(compound), (state.dim, apparatus_dim), keep=0)
    return float(np.max(np.abs(reduced.matrix - von_neumann_mixture(state, obs).matrix)))
