"""Random states and Hamiltonians for property sweeps"""
import numpy as np

from .states import StateVector

__all__ = ["random_state", "random_hermitian"]


def random_state(dim, rng):
    """Haar-random unit vector (normalized complex Gaussian)."""
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector(z, normalize=True)


def random_hermitian(dim, rng, scale=1.0):
    """Random self-adjoint matrix from the Gaussian unitary ensemble."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * 0.5 * (z + z.conj().T)
