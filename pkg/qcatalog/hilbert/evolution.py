"""Unitary time evolution generated by a Hamiltonian observable"""
from dataclasses import dataclass

import numpy as np

from ..exceptions import DimensionMismatchError
from .observables import Observable
from .states import StateVector

__all__ = [
    "EvolutionConfig",
    "evolution_operator",
    "evolve",
]


@dataclass(frozen=True)
class EvolutionConfig:
    """
    Args:
        hbar (float): reduced Planck constant, must be positive. Default: 1.0 (natural units).
        t (float): elapsed time. Default: 0.0.
    """

    hbar: float = 1.0
    t: float = 0.0

    def __post_init__(self):
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, but got {self.hbar}.")


def evolution_operator(hamiltonian: Observable, cfg: EvolutionConfig):
    """U(t) = sum_k exp(-i E_k t / hbar) P_k, unitary by construction."""
    return sum(
        np.exp(-1j * term.eigenvalue * cfg.t / cfg.hbar) * term.projector for term in hamiltonian.spectrum
    )


def evolve(state: StateVector, hamiltonian: Observable, cfg: EvolutionConfig) -> StateVector:
    if state.dim != hamiltonian.dim:
        raise DimensionMismatchError(f"Dimension mismatch: state {state.dim} vs Hamiltonian {hamiltonian.dim}.")
    if cfg.t == 0:
        return state
    return StateVector(evolution_operator(hamiltonian, cfg) @ state.amplitudes)
