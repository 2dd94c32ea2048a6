"""Utility Tools"""
from . import logger, random
from .logger import *
from .random import *

__all__ = []
__all__.extend(logger.__all__)
__all__.extend(random.__all__)
