"""
Probability as predicted relative frequency
"""
from . import binomial, distribution, frequency
from .binomial import *
from .distribution import *
from .frequency import *

__all__ = []
__all__.extend(binomial.__all__)
__all__.extend(distribution.__all__)
__all__.extend(frequency.__all__)
