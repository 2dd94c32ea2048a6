"""qcatalog init"""
from . import cli, epr, exceptions, hilbert, lattice, measurement, prediction, utils
from .cli import *
from .epr import *
from .exceptions import *
from .hilbert import *
from .lattice import *
from .measurement import *
from .prediction import *
from .utils import *
from .version import __version__

__all__ = []
__all__.extend(cli.__all__)
__all__.extend(epr.__all__)
__all__.extend(exceptions.__all__)
__all__.extend(hilbert.__all__)
__all__.extend(lattice.__all__)
__all__.extend(measurement.__all__)
__all__.extend(prediction.__all__)
__all__.extend(utils.__all__)
