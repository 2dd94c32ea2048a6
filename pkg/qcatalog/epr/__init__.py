"""
The spin-1/2 EPR experiment: singlet correlations, no-signaling, post-selection and CHSH
"""
from . import direction, singlet_state, trials
from .direction import *
from .singlet_state import *
from .trials import *

__all__ = []
__all__.extend(direction.__all__)
__all__.extend(singlet_state.__all__)
__all__.extend(trials.__all__)
