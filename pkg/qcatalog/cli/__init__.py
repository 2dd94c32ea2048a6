"""
Command-line front end: command registry, report writers and the commands
"""
from . import commands, registry, report, specs
from .commands import *
from .registry import *
from .report import *
from .specs import *

__all__ = []
__all__.extend(commands.__all__)
__all__.extend(registry.__all__)
__all__.extend(report.__all__)
__all__.extend(specs.__all__)
