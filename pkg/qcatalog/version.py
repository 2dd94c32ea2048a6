"""version init"""
__version__ = "0.1.0"

ARTIFACT = "qcatalog"
