"""Dense complex matrices and the named-observable registry"""
import fnmatch
import sys

import numpy as np

from ..exceptions import DimensionMismatchError, NotAProjectorError, NotSelfAdjointError
from .constants import TOL_NORM, get_max_dim

__all__ = [
    "as_complex_matrix",
    "max_asymmetry",
    "is_self_adjoint",
    "is_projector",
    "check_projector",
    "identity",
    "pauli_x",
    "pauli_y",
    "pauli_z",
    "list_observables",
    "is_observable",
    "observable_entrypoint",
    "create_observable",
]

_observable_entrypoints = {}
_observable_to_module = {}


def as_complex_matrix(m):
    """Return ``m`` as a read-only square complex128 array, checking its shape."""
    arr = np.array(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError(f"A square matrix is required, but got shape {arr.shape}.")
    dim = arr.shape[0]
    if dim < 1:
        raise DimensionMismatchError("Matrix dimension must be at least 1.")
    if dim > get_max_dim():
        raise DimensionMismatchError(f"Matrix dimension {dim} exceeds the configured limit {get_max_dim()}.")
    arr.setflags(write=False)
    return arr


def max_asymmetry(m):
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def is_self_adjoint(m, tol=TOL_NORM):
    return max_asymmetry(m) <= tol


def is_projector(m, tol=TOL_NORM):
    m = np.asarray(m)
    return is_self_adjoint(m, tol) and float(np.max(np.abs(m @ m - m))) <= tol


def check_projector(m, dim=None):
    """Validate an orthogonal projector, optionally against an expected dimension."""
    p = as_complex_matrix(m)
    if dim is not None and p.shape[0] != dim:
        raise DimensionMismatchError(f"Projector acts on dimension {p.shape[0]}, expected {dim}.")
    if not is_self_adjoint(p):
        raise NotAProjectorError(f"Projector is not self-adjoint (max asymmetry {max_asymmetry(p):.3e}).")
    residual = float(np.max(np.abs(p @ p - p)))
    if residual > TOL_NORM:
        raise NotAProjectorError(f"Projector is not idempotent (max |P^2 - P| = {residual:.3e}).")
    return p


def check_self_adjoint(m):
    arr = as_complex_matrix(m)
    asym = max_asymmetry(arr)
    if asym > TOL_NORM:
        raise NotSelfAdjointError(f"Matrix is not self-adjoint: max asymmetry {asym:.3e} exceeds {TOL_NORM:.0e}.")
    return arr


def register_observable(fn):
    # lookup containing module
    mod = sys.modules[fn.__module__]
    name = fn.__name__
    if hasattr(mod, "__all__"):
        if name not in mod.__all__:
            mod.__all__.append(name)
    else:
        mod.__all__ = [name]

    _observable_entrypoints[name] = fn
    _observable_to_module[name] = fn.__module__.split(".")[-1]
    return fn


def list_observables(filter=""):
    names = _observable_entrypoints.keys()
    if filter:
        names = fnmatch.filter(names, filter)
    return sorted(names)


def is_observable(name):
    """
    Check if an observable name exists
    """
    return name in _observable_entrypoints


def observable_entrypoint(name):
    """
    Fetch an observable entrypoint for specified name
    """
    return _observable_entrypoints[name]


def create_observable(name: str, **kwargs):
    r"""Creates a named observable.

    Args:
        name (str): registered observable name, e.g. ``pauli_z`` or ``spin``.
        kwargs: constructor arguments of that observable, e.g. ``dim`` or ``theta``.

    Returns:
        Observable object
    """
    if not is_observable(name):
        raise RuntimeError(f"Unknown observable {name}")
    kwargs = {k: v for k, v in kwargs.items() if v is not None}
    return observable_entrypoint(name)(**kwargs)


def identity(dim):
    return as_complex_matrix(np.eye(dim))


def pauli_x():
    return as_complex_matrix([[0, 1], [1, 0]])


def pauli_y():
    return as_complex_matrix([[0, -1j], [1j, 0]])


def pauli_z():
    return as_complex_matrix([[1, 0], [0, -1]])
