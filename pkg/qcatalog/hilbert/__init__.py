"""
Finite-dimensional Hilbert space: states, observables, Born rule and time evolution
"""
from . import constants, ensembles, evolution, observables, operators, states, tensor
from .constants import *
from .ensembles import *
from .evolution import *
from .observables import *
from .operators import *
from .states import *
from .tensor import *

__all__ = []
__all__.extend(ensembles.__all__)
__all__.extend(evolution.__all__)
__all__.extend(observables.__all__)
__all__.extend(operators.__all__)
__all__.extend(states.__all__)
__all__.extend(tensor.__all__)
