"""The spin singlet: correlations, no-signaling and the CHSH expression"""
import itertools
import math

import numpy as np

from ..hilbert.observables import Observable, spectral_decompose
from ..hilbert.operators import pauli_x, pauli_y, pauli_z, register_observable
from ..hilbert.states import StateVector
from ..hilbert.tensor import tensor_op
from ..prediction.distribution import JointDistribution
from .direction import Direction, angle_between

__all__ = [
    "OUTCOMES",
    "LHV_BOUND",
    "TSIRELSON_BOUND",
    "singlet",
    "spin_observable",
    "outcome_projector",
    "joint_distribution",
    "joint_distribution_closed_form",
    "correlation",
    "chsh",
    "lhv_chsh_values",
    "lhv_chsh_bound",
]

OUTCOMES = (-1.0, 1.0)
LHV_BOUND = 2.0
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)


def singlet() -> StateVector:
    """(|01> - |10>) / sqrt(2), total spin zero."""
    return StateVector(np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0))


def spin_observable(d: Direction) -> Observable:
    """n . sigma, with eigenvalues -1 and +1 and eigenprojectors (I -/+ n . sigma) / 2."""
    nx, ny, nz = d.unit_vector()
    return spectral_decompose(nx * pauli_x() + ny * pauli_y() + nz * pauli_z())


@register_observable
def spin(theta=0.0, phi=0.0):
    return spin_observable(Direction(theta, phi))


def outcome_projector(d: Direction, outcome):
    """(I + outcome * n . sigma) / 2, built in closed form."""
    nx, ny, nz = d.unit_vector()
    n_sigma = nx * pauli_x() + ny * pauli_y() + nz * pauli_z()
    return 0.5 * (np.eye(2) + float(outcome) * n_sigma)


def joint_distribution(a: Direction, b: Direction) -> JointDistribution:
    """p(alpha, beta) = <psi| P_alpha^a (x) P_beta^b |psi> on the singlet."""
    psi = singlet().amplitudes
    table = np.empty((2, 2))
    for i, alpha in enumerate(OUTCOMES):
        for j, beta in enumerate(OUTCOMES):
            joint = tensor_op(outcome_projector(a, alpha), outcome_projector(b, beta))
            table[i, j] = np.real(np.vdot(psi, joint @ psi))
    return JointDistribution(OUTCOMES, OUTCOMES, np.clip(table, 0.0, None))


def joint_distribution_closed_form(a: Direction, b: Direction) -> JointDistribution:
    """p(alpha, beta) = (1 - alpha beta cos(angle(a, b))) / 4."""
    c = math.cos(angle_between(a, b))
    table = [[0.25 * (1.0 - alpha * beta * c) for beta in OUTCOMES] for alpha in OUTCOMES]
    return JointDistribution(OUTCOMES, OUTCOMES, table)


def correlation(a: Direction, b: Direction) -> float:
    """E(a, b) = sum alpha beta p(alpha, beta); equals -cos(angle(a, b))."""
    return float(sum(x * y * p for (x, y), p in joint_distribution(a, b).items()))


def chsh(a: Direction, a2: Direction, b: Direction, b2: Direction) -> float:
    """S = E(a, b) - E(a, b') + E(a', b) + E(a', b')."""
    return correlation(a, b) - correlation(a, b2) + correlation(a2, b) + correlation(a2, b2)


def lhv_chsh_values():
    """S for each of the 16 deterministic local strategies (A(a), A(a'), B(b), B(b')) in {-1, +1}^4."""
    values = []
    for aa, aa2, bb, bb2 in itertools.product((-1, 1), repeat=4):
        values.append(((aa, aa2, bb, bb2), aa * bb - aa * bb2 + aa2 * bb + aa2 * bb2))
    return values


def lhv_chsh_bound():
    return max(abs(s) for _, s in lhv_chsh_values())
