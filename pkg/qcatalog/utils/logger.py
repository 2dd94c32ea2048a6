"""logger setup for entry scripts"""
import logging
import sys

__all__ = ["setup_logger"]


def setup_logger(name="qcatalog", level="INFO", stream=None):
    """Attach a single ``%(message)s`` stream handler (stderr by default) to the named logger.

    Repeated calls replace the handler instead of stacking another one.
    """
    logger = logging.getLogger(name)
    logger.setLevel(level.upper() if isinstance(level, str) else level)
    for h in list(logger.handlers):
        if getattr(h, "_qcatalog", False):
            logger.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr if stream is None else stream)
    handler.setFormatter(logging.Formatter("%(message)s"))
    handler._qcatalog = True
    logger.addHandler(handler)
    logger.propagate = False
    return logger
