"""command registry and list"""
import fnmatch
import inspect
import sys

__all__ = [
    "register_command",
    "list_commands",
    "is_command",
    "command_entrypoint",
    "command_options",
]

_command_entrypoints = {}


def register_command(fn):
    """Register ``cmd_<name>`` under ``<name>``."""
    mod = sys.modules[fn.__module__]
    if hasattr(mod, "__all__"):
        if fn.__name__ not in mod.__all__:
            mod.__all__.append(fn.__name__)
    else:
        mod.__all__ = [fn.__name__]

    name = fn.__name__[4:] if fn.__name__.startswith("cmd_") else fn.__name__
    _command_entrypoints[name] = fn
    return fn


def list_commands(filter=""):
    names = _command_entrypoints.keys()
    if filter:
        names = fnmatch.filter(names, filter)
    return sorted(names)


def is_command(name):
    return name in _command_entrypoints


def command_entrypoint(name):
    if not is_command(name):
        raise RuntimeError(f"Unknown command {name}")
    return _command_entrypoints[name]


def command_options(name, args):
    """Pick the keyword options of command ``name`` out of a parsed namespace.

    Unset (None) options keep the command defaults.
    """
    params = inspect.signature(command_entrypoint(name)).parameters
    values = vars(args)
    return {k: values[k] for k in list(params)[1:] if values.get(k) is not None}
