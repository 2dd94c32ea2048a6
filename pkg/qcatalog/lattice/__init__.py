"""
Quantum logic: the orthocomplemented lattice of subspaces and its Boolean sublattices
"""
from . import axioms, boolean, classical, subspace
from .axioms import *
from .boolean import *
from .classical import *
from .subspace import *

__all__ = []
__all__.extend(axioms.__all__)
__all__.extend(boolean.__all__)
__all__.extend(classical.__all__)
__all__.extend(subspace.__all__)
