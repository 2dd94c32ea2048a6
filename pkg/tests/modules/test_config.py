import os
import sys

sys.path.append(".")

import pytest
import yaml

from config import _check_cfgs_in_parser, create_parser, parse_args, save_args


def test_checker_valid():
    cfgs = yaml.safe_load(
        """
        command: dice
        seed: 1
        throws: 6
        """
    )
    _, parser = create_parser()
    _check_cfgs_in_parser(cfgs, parser)


def test_checker_invalid():
    cfgs = yaml.safe_load(
        """
        command: dice
        seed: 1
        valid: False
        """
    )
    _, parser = create_parser()
    with pytest.raises(KeyError) as exc_info:
        _check_cfgs_in_parser(cfgs, parser)
    assert exc_info.type is KeyError
    assert exc_info.value.args[0] == "valid does not exist in ArgumentParser!"


@pytest.mark.parametrize("seed", [0, 7])
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_parse_args_without_yaml(seed, fmt):
    args = parse_args(["bell", f"--seed={seed}", f"--format={fmt}"])
    assert args.command == "bell"
    assert args.seed == seed
    assert args.format == fmt
    assert args.trials == 100000  # default value
    assert args.chsh_angles is None


def test_parse_args_lists():
    args = parse_args(["epr", "--alice_angles", "0", "0.5", "--bob_angles", "1", "--chsh_angles", "0", "1", "2", "3"])
    assert args.alice_angles == [0.0, 0.5]
    assert args.bob_angles == [1.0]
    assert args.chsh_angles == [0.0, 1.0, 2.0, 3.0]


@pytest.mark.parametrize("cfg_yaml", ["configs/bell/bell_optimal.yaml"])
@pytest.mark.parametrize("trials", [1000])
def test_parse_args_with_yaml(cfg_yaml, trials):
    args = parse_args([f"--config={cfg_yaml}", f"--trials={trials}"])
    assert args.trials == trials
    with open(cfg_yaml, "r") as f:
        cfg = yaml.safe_load(f)
    assert args.command == cfg["command"]  # from cfg.yaml
    assert args.chsh_angles == cfg["chsh_angles"]


def test_parse_args_from_all_yaml():
    cfgs_root = "configs"
    cfg_paths = []
    for dirpath, dirnames, filenames in os.walk(cfgs_root):
        for filename in filenames:
            if filename.endswith((".yaml", "yml")):
                cfg_paths.append(os.path.join(dirpath, filename))
    assert cfg_paths
    for cfg_yaml in cfg_paths:
        try:
            args = parse_args([f"--config={cfg_yaml}"])
            with open(cfg_yaml, "r") as f:
                cfg = yaml.safe_load(f)
            assert args.command == cfg["command"]
            assert os.path.basename(os.path.dirname(cfg_yaml)) == args.command
        except KeyError as e:
            raise AssertionError(f"{cfg_yaml} has some invalid options: {e}")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nonsense"],
        ["dice", "--format=xml"],
        ["dice", "--seed=abc"],
        ["bell", "--chsh_angles", "0", "1"],
    ],
)
def test_usage_errors_exit_with_code_one(argv):
    with pytest.raises(SystemExit) as exc_info:
        parse_args(argv)
    assert exc_info.value.code == 1


def test_save_args_round_trip(tmp_path):
    args = parse_args(["lattice", "--dim=3", "--num_subspaces=20"])
    path = str(tmp_path / "saved" / "lattice.yaml")
    save_args(args, path)
    again = parse_args([f"--config={path}"])
    assert again.command == "lattice"
    assert again.dim == 3
    assert again.num_subspaces == 20
