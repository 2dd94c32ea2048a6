import argparse
import logging
import os
import sys

import yaml

from qcatalog.cli import list_commands

logger = logging.getLogger(__name__)

USAGE_ERROR = 1


def str2bool(v):
    if isinstance(v, bool):
        return v
    if v.lower() in ("yes", "true", "1"):
        return True
    elif v.lower() in ("no", "false", "0"):
        return False
    else:
        raise argparse.ArgumentTypeError("Boolean value expected.")


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


# fmt: off
def create_parser():
    # The first arg parser parses out only the --config argument, this argument is used to
    # load a yaml file containing key-values that override the defaults for the main parser below
    parser_config = ArgumentParser(description='Run Config', add_help=False)
    parser_config.add_argument('-c', '--config', type=str, default='',
                               help='YAML config file specifying default arguments (default="")')

    # The main parser. It inherits the --config argument for better help information.
    parser = ArgumentParser(description='Quantum prediction catalog', parents=[parser_config])

    # System parameters
    group = parser.add_argument_group('System parameters')
    group.add_argument('command', type=str, nargs='?', default=None, choices=list_commands(),
                       help='Command to run; may also be given as "command" in the YAML config')
    group.add_argument('--seed', type=int, default=42,
                       help='Seed of every sampled quantity, in [0, 2**64) (default=42)')
    group.add_argument('--trials', type=int, default=100000,
                       help='Number of sampled trials (default=100000)')
    group.add_argument('--format', type=str, default='csv', choices=['csv', 'json'],
                       help='Report format (default="csv")')
    group.add_argument('--out', type=str, default='',
                       help='Report file. Empty means standard output (default="")')
    group.add_argument('--log_level', type=str, default='INFO', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                       help='Logging level of messages written to standard error (default="INFO")')
    group.add_argument('--progress', type=str2bool, nargs='?', const=True, default=False,
                       help='Show progress bars for long sweeps (default=False)')
    group.add_argument('--num_workers', type=int, default=1,
                       help='Number of threads running EPR trial blocks (default=1)')
    group.add_argument('--block_size', type=int, default=100000,
                       help='Trials per EPR block; block k samples from seed stream k (default=100000)')
    group.add_argument('--save_config', type=str, default='',
                       help='Save the resolved arguments to this YAML file (default="")')

    # Dice parameters
    group = parser.add_argument_group('Dice parameters')
    group.add_argument('--throws', type=int, default=12,
                       help='Number of throws in one series (default=12)')
    group.add_argument('--face_probability', type=str, default='1/6',
                       help='Probability of the counted face, as a fraction or decimal (default="1/6")')
    group.add_argument('--sampled', type=str2bool, nargs='?', const=True, default=True,
                       help='Add the sampled frequency column (default=True)')

    # EPR parameters
    group = parser.add_argument_group('EPR parameters')
    group.add_argument('--alice_angles', type=float, nargs='+', default=None,
                       help='Alice settings, angles in radians from vertical in the x-z plane '
                            '(default=[0, pi/3, pi/2])')
    group.add_argument('--bob_angles', type=float, nargs='+', default=None,
                       help='Bob settings, angles in radians from vertical in the x-z plane '
                            '(default=[0, pi/3, pi/2])')
    group.add_argument('--trial_log', type=str, default='',
                       help='Also write the per-trial log as CSV to this path (default="")')

    # Bell parameters
    group = parser.add_argument_group('Bell parameters')
    group.add_argument('--chsh_angles', type=float, nargs=4, default=None,
                       help="Planar settings a, a', b, b' in radians (default=[0, pi/2, pi/4, 3pi/4])")

    # Measurement parameters
    group = parser.add_argument_group('Measurement parameters')
    group.add_argument('--state', type=str, default=None,
                       help='State as a JSON document or a path to one (default=equal superposition in dim 2)')
    group.add_argument('--observable', type=str, default=None,
                       help='Observable as a JSON document or a path to one (default={"name": "sigma_z"})')
    group.add_argument('--apparatus_dim', type=int, default=None,
                       help='Dimension of the apparatus space. None means one pointer state per outcome '
                            '(default=None)')

    # Lattice parameters
    group = parser.add_argument_group('Lattice parameters')
    group.add_argument('--dim', type=int, default=2,
                       help='Dimension of the state space, at least 2 (default=2)')
    group.add_argument('--num_subspaces', type=int, default=500,
                       help='Number of random subspace cases (default=500)')
    group.add_argument('--classical_size', type=int, default=4,
                       help='Universe size of the classical comparison lattice (default=4)')

    return parser_config, parser
# fmt: on


def _check_cfgs_in_parser(cfgs: dict, parser: argparse.ArgumentParser):
    actions_dest = [action.dest for action in parser._actions]
    defaults_key = parser._defaults.keys()
    for k in cfgs.keys():
        if k not in actions_dest and k not in defaults_key:
            raise KeyError(f"{k} does not exist in ArgumentParser!")


def parse_args(args=None):
    parser_config, parser = create_parser()
    # Do we have a config file to parse?
    args_config, remaining = parser_config.parse_known_args(args)
    if args_config.config:
        with open(args_config.config, "r") as f:
            cfg = yaml.safe_load(f) or {}
            if not isinstance(cfg, dict):
                raise yaml.YAMLError(f"{args_config.config} holds no mapping of options.")
            _check_cfgs_in_parser(cfg, parser)
            parser.set_defaults(**cfg)
            parser.set_defaults(config=args_config.config)

    # The main arg parser parses the rest of the args, the usual
    # defaults will have been overridden if config file specified.
    args = parser.parse_args(remaining)
    if args.command is None:
        parser.error("a command is required, one of: " + ", ".join(list_commands()))
    if args.command not in list_commands():
        parser.error(f"unknown command {args.command!r}, choose from: " + ", ".join(list_commands()))
    return args


def save_args(args: argparse.Namespace, filepath: str) -> None:
    """Save ``args`` to a YAML file that ``--config`` can read back.
    Args:
        args (Namespace): The parsed arguments to be saved.
        filepath (str): A filepath ends with ``.yaml``.
    """
    assert isinstance(args, argparse.Namespace)
    assert filepath.endswith(".yaml")
    os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
    values = {k: v for k, v in vars(args).items() if k not in ("config", "save_config")}
    with open(filepath, "w") as f:
        yaml.safe_dump(values, f)
    logger.info(f"Args is saved to {filepath}.")
