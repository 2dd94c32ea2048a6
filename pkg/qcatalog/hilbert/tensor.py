"""Tensor products of states and operators (composite systems)"""
import numpy as np

from .operators import as_complex_matrix
from .states import StateVector

__all__ = ["tensor_state", "tensor_op"]


def tensor_state(a: StateVector, b: StateVector) -> StateVector:
    return StateVector(np.kron(a.amplitudes, b.amplitudes))


def tensor_op(a, b):
    return as_complex_matrix(np.kron(as_complex_matrix(a), as_complex_matrix(b)))
