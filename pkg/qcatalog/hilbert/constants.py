"""
Numerical tolerances and limits shared by every module
"""

TOL_NORM = 1e-10  # unit norm, self-adjointness, projector identities
TOL_EIG = 1e-8  # accuracy of computed eigenvalues
TOL_DEGEN = 1e-8  # eigenvalues closer than this share one eigenspace
TOL_RANK = 1e-9  # singular-value cutoff for subspace rank decisions
TOL_ZERO = 1e-12  # probabilities at or below this are impossible events
DEFAULT_MAX_DIM = 64

# Use Get/Set to R/W this variable.
_MAX_DIM = DEFAULT_MAX_DIM


def get_max_dim():
    return _MAX_DIM


def set_max_dim(dim):
    global _MAX_DIM
    if int(dim) < 1:
        raise ValueError(f"The maximum dimension must be a positive integer, but got {dim}.")
    _MAX_DIM = int(dim)
