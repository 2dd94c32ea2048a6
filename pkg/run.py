""" Command-line entry point: python run.py <command> [options] """
import sys

import yaml

from qcatalog import __version__
from qcatalog.cli import RunConfig, command_entrypoint, command_options, write_report
from qcatalog.exceptions import InvariantViolationError
from qcatalog.utils import prng_identifier, setup_logger

from config import USAGE_ERROR, parse_args, save_args  # isort: skip

SUCCESS = 0
INVARIANT_VIOLATION = 2

logger = setup_logger("qcatalog")


def run(args):
    """run one command and write its report; returns the report text"""
    logger.setLevel(args.log_level)
    cfg = RunConfig.from_args(args)

    logger.info("-" * 40)
    logger.info(
        f"Command: {args.command} \n"
        f"Seed: {cfg.seed} \n"
        f"Trials: {cfg.trials} \n"
        f"PRNG: {prng_identifier()} \n"
        f"Version: {__version__}"
    )
    logger.info("-" * 40)
    if args.save_config:
        save_args(args, args.save_config)

    report = command_entrypoint(args.command)(cfg, **command_options(args.command, args))
    text = write_report(report, cfg.output_format, cfg.output_path)
    if not cfg.output_path:
        sys.stdout.write(text)
    return text


def main(argv=None):
    try:
        args = parse_args(argv)
    except (OSError, KeyError, yaml.YAMLError) as e:
        logger.error(f"error: {e}")
        return USAGE_ERROR
    try:
        run(args)
    except InvariantViolationError as e:
        logger.error(f"self-check failed: {e}")
        return INVARIANT_VIOLATION
    except (ValueError, OSError) as e:
        logger.error(f"error: {e}")
        return USAGE_ERROR
    return SUCCESS


if __name__ == "__main__":
    sys.exit(main())
