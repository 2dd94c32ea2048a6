"""
Measurement: collapse, the von Neumann mixture and the pre-measurement interaction
"""
from . import density, mixture, projective
from .density import *
from .mixture import *
from .projective import *

__all__ = []
__all__.extend(density.__all__)
__all__.extend(mixture.__all__)
__all__.extend(projective.__all__)
