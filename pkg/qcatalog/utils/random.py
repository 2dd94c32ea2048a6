"""random seed and the PRNG contract

All sampling in qcatalog goes through :func:`create_generator`, so every result is a
function of ``(seed, stream)`` and the generator named by :data:`PRNG_NAME`.
"""
import numpy as np

from ..hilbert.constants import TOL_ZERO

__all__ = [
    "PRNG_NAME",
    "SEED_STREAM_STEP",
    "prng_identifier",
    "derive_seed",
    "create_generator",
    "inverse_cdf_sample",
]

PRNG_NAME = "numpy.random.PCG64"
SEED_STREAM_STEP = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def prng_identifier():
    """Name of the generator, versioned by the numpy release that implements it."""
    return f"{PRNG_NAME} (numpy {np.__version__})"


def derive_seed(seed, stream=0):
    """
    seed: base seed int
    stream: index of an independent stream; stream k uses seed + k * 0x9E3779B97F4A7C15 (mod 2**64)
    """
    if seed is None:
        seed = 0
    return (int(seed) + int(stream) * SEED_STREAM_STEP) & _MASK64


def create_generator(seed, stream=0):
    return np.random.Generator(np.random.PCG64(derive_seed(seed, stream)))


def inverse_cdf_sample(probabilities, uniforms):
    """Map uniforms in [0, 1) to outcome indices by inverse-CDF over the given order.

    Probabilities below ``TOL_ZERO`` count as impossible and are never drawn.
    """
    p = np.asarray(probabilities, dtype=float)
    p = np.where(p < TOL_ZERO, 0.0, p)
    cdf = np.cumsum(p)
    if cdf[-1] <= 0:
        raise ValueError("Cannot sample from a distribution with zero total probability.")
    cdf /= cdf[-1]
    idx = np.searchsorted(cdf, np.asarray(uniforms, dtype=float), side="right")
    return np.minimum(idx, len(p) - 1)
