"""Seeded EPR runs, the trial log and post-selection bookkeeping"""
import csv
import io
import logging
import math
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from tqdm import tqdm

from ..exceptions import DimensionMismatchError, EmptySelectionError
from ..hilbert.tensor import tensor_op
from ..measurement.projective import collapse
from ..measurement.density import DensityOperator, partial_trace
from ..prediction.distribution import OutcomeDistribution
from ..prediction.frequency import FrequencyRecord
from ..utils.random import create_generator, inverse_cdf_sample, prng_identifier
from ..version import ARTIFACT, __version__
from .direction import Direction
from .singlet_state import OUTCOMES, joint_distribution, outcome_projector, singlet

__all__ = [
    "TrialRecord",
    "TrialLog",
    "PostSelection",
    "run_trials",
    "run_trial_blocks",
    "postselect",
    "marginal_record",
]

_logger = logging.getLogger(__name__)

TrialRecord = namedtuple("TrialRecord", ["alice_dir", "alice_out", "bob_dir", "bob_out"])
PostSelection = namedtuple("PostSelection", ["record", "prediction", "bob_dir", "selected"])

CSV_COLUMNS = ["trial_index", "alice_theta", "alice_phi", "alice_out", "bob_theta", "bob_phi", "bob_out"]


def _fmt_angle(x):
    return format(float(x), ".12g")


class TrialLog:
    """
    Per-trial settings and outcomes on both wings, stored column-wise.

    Args:
        alice_settings, bob_settings: the setting lists each wing chose from.
        alice_choice, bob_choice: per-trial index into the setting lists.
        alice_out, bob_out: per-trial outcomes in {-1, +1}.
        seed (int): seed of the run.
        prng (str): generator identifier. Default: the current :func:`prng_identifier`.
    """

    def __init__(self, alice_settings, bob_settings, alice_choice, bob_choice, alice_out, bob_out, seed, prng=None):
        self.alice_settings = tuple(alice_settings)
        self.bob_settings = tuple(bob_settings)
        self.alice_choice = np.asarray(alice_choice, dtype=np.int64)
        self.bob_choice = np.asarray(bob_choice, dtype=np.int64)
        self.alice_out = np.asarray(alice_out, dtype=np.int8)
        self.bob_out = np.asarray(bob_out, dtype=np.int8)
        self.seed = seed
        self.prng = prng_identifier() if prng is None else prng
        n = len(self.alice_choice)
        if not len(self.bob_choice) == len(self.alice_out) == len(self.bob_out) == n:
            raise DimensionMismatchError("Trial log columns have different lengths.")
        for out in (self.alice_out, self.bob_out):
            if n and not np.all(np.abs(out) == 1):
                raise ValueError("Outcomes must be -1 or +1.")

    def __len__(self):
        return len(self.alice_choice)

    def __iter__(self):
        for ia, ib, oa, ob in zip(self.alice_choice, self.bob_choice, self.alice_out, self.bob_out):
            yield TrialRecord(self.alice_settings[ia], int(oa), self.bob_settings[ib], int(ob))

    @property
    def trials(self):
        return list(self)

    @staticmethod
    def concatenate(logs):
        """Merge logs in the given order; all must share the same setting lists."""
        if not logs:
            raise ValueError("Nothing to concatenate.")
        first = logs[0]
        for log in logs[1:]:
            if log.alice_settings != first.alice_settings or log.bob_settings != first.bob_settings:
                raise ValueError("Cannot concatenate trial logs with different setting lists.")
        return TrialLog(
            first.alice_settings,
            first.bob_settings,
            np.concatenate([log.alice_choice for log in logs]),
            np.concatenate([log.bob_choice for log in logs]),
            np.concatenate([log.alice_out for log in logs]),
            np.concatenate([log.bob_out for log in logs]),
            seed=first.seed,
            prng=first.prng,
        )

    def setting_index(self, wing, direction):
        settings = self.alice_settings if wing == "alice" else self.bob_settings
        for k, d in enumerate(settings):
            if d.isclose(direction):
                return k
        return None

    def write_csv(self, fp):
        """Write the log as CSV to an open text file; artifact, version, seed and PRNG go in a '#' footer."""
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for i, (ia, ib, oa, ob) in enumerate(zip(self.alice_choice, self.bob_choice, self.alice_out, self.bob_out)):
            a, b = self.alice_settings[ia], self.bob_settings[ib]
            writer.writerow(
                [i, _fmt_angle(a.theta), _fmt_angle(a.phi), int(oa), _fmt_angle(b.theta), _fmt_angle(b.phi), int(ob)]
            )
        fp.write(f"# artifact={ARTIFACT}\n")
        fp.write(f"# version={__version__}\n")
        fp.write(f"# seed={self.seed}\n")
        fp.write(f"# prng={self.prng}\n")

    def to_csv(self, path=None):
        """Write to ``path``, or return the CSV text when no path is given."""
        if path is None:
            buf = io.StringIO()
            self.write_csv(buf)
            return buf.getvalue()
        with open(path, "w", encoding="utf-8", newline="") as fp:
            self.write_csv(fp)
        _logger.info(f"Trial log with {len(self)} trials is saved to {path}.")
        return path

    @classmethod
    def read_csv(cls, path):
        with open(path, "r", encoding="utf-8") as fp:
            lines = fp.read().splitlines()
        meta = {}
        rows = []
        for line in lines:
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key] = value
            elif line:
                rows.append(line)
        reader = csv.DictReader(rows)
        alice, bob = {}, {}
        ia, ib, oa, ob = [], [], [], []
        for row in reader:
            a_key = (row["alice_theta"], row["alice_phi"])
            b_key = (row["bob_theta"], row["bob_phi"])
            ia.append(alice.setdefault(a_key, len(alice)))
            ib.append(bob.setdefault(b_key, len(bob)))
            oa.append(int(row["alice_out"]))
            ob.append(int(row["bob_out"]))
        seed = int(meta["seed"]) if meta.get("seed", "None") != "None" else None
        return cls(
            [Direction(float(t), float(p)) for t, p in alice],
            [Direction(float(t), float(p)) for t, p in bob],
            ia,
            ib,
            oa,
            ob,
            seed=seed,
            prng=meta.get("prng"),
        )


def run_trials(a_settings, b_settings, n: int, seed: int, stream: int = 0) -> TrialLog:
    """Simulate ``n`` singlet trials; each wing picks its setting uniformly at random per trial.

    A single-element setting list reproduces a run with fixed settings.
    """
    a_settings, b_settings = list(a_settings), list(b_settings)
    if not a_settings or not b_settings:
        raise ValueError("Both wings need at least one setting.")
    if n < 1:
        raise ValueError(f"n must be positive, but got {n}.")
    rng = create_generator(seed, stream)
    ia = rng.integers(0, len(a_settings), size=n)
    ib = rng.integers(0, len(b_settings), size=n)
    u = rng.random(n)

    alice_out = np.empty(n, dtype=np.int8)
    bob_out = np.empty(n, dtype=np.int8)
    for i, a in enumerate(a_settings):
        for j, b in enumerate(b_settings):
            mask = (ia == i) & (ib == j)
            if not np.any(mask):
                continue
            # outcome order (-1,-1), (-1,+1), (+1,-1), (+1,+1)
            idx = inverse_cdf_sample(joint_distribution(a, b).table.reshape(-1), u[mask])
            alice_out[mask] = np.where(idx // 2 == 0, -1, 1)
            bob_out[mask] = np.where(idx % 2 == 0, -1, 1)
    _logger.debug("Simulated %d EPR trials (seed=%d, stream=%d)", n, seed, stream)
    return TrialLog(a_settings, b_settings, ia, ib, alice_out, bob_out, seed=seed)


def run_trial_blocks(a_settings, b_settings, n, seed, block_size=100_000, num_workers=1, progress=False):
    """Run ``n`` trials as blocks of ``block_size`` on derived seed streams, merged in block order.

    Block k uses stream k, so the merged log does not depend on ``num_workers``.
    """
    if block_size < 1:
        raise ValueError(f"block_size must be positive, but got {block_size}.")
    num_blocks = math.ceil(n / block_size)
    sizes = [min(block_size, n - k * block_size) for k in range(num_blocks)]

    def _block(k):
        return run_trials(a_settings, b_settings, sizes[k], seed, stream=k)

    with ThreadPoolExecutor(max_workers=max(1, num_workers)) as pool:
        logs = list(tqdm(pool.map(_block, range(num_blocks)), total=num_blocks, disable=not progress, desc="blocks"))
    return TrialLog.concatenate(logs)


def _record(outcomes, seed):
    counts = {label: int(np.count_nonzero(outcomes == int(label))) for label in OUTCOMES}
    return FrequencyRecord(trials=int(len(outcomes)), counts=counts, seed=seed)


def marginal_record(log: TrialLog, wing="bob", direction=None, other_direction=None) -> FrequencyRecord:
    """Unconditioned frequencies of one wing, optionally restricted to given settings on either wing."""
    if wing not in ("alice", "bob"):
        raise ValueError(f"wing must be 'alice' or 'bob', but got {wing!r}.")
    other = "alice" if wing == "bob" else "bob"
    own_choice, other_choice = log.bob_choice, log.alice_choice
    if wing == "alice":
        own_choice, other_choice = other_choice, own_choice
    mask = np.ones(len(log), dtype=bool)
    for w, choice, d in ((wing, own_choice, direction), (other, other_choice, other_direction)):
        if d is not None:
            k = log.setting_index(w, d)
            if k is None:
                raise EmptySelectionError(f"The log contains no trials with {w} setting {d}.")
            mask &= choice == k
    outcomes = (log.bob_out if wing == "bob" else log.alice_out)[mask]
    if outcomes.size == 0:
        raise EmptySelectionError("No trials match the requested settings.")
    return _record(outcomes, log.seed)


def postselect(log: TrialLog, alice_outcome, alice_dir: Direction, bob_dir: Direction = None) -> PostSelection:
    """Bob's frequencies among trials where Alice measured ``alice_dir`` and found ``alice_outcome``,
    together with the prediction from the singlet collapsed by Alice's result.

    Args:
        bob_dir: Bob's setting to read; may be omitted when the selected trials used a single Bob setting.
    """
    if alice_outcome not in (-1, 1):
        raise ValueError(f"alice_outcome must be -1 or +1, but got {alice_outcome}.")
    ka = log.setting_index("alice", alice_dir)
    if ka is None:
        raise EmptySelectionError(f"The log contains no trials with alice setting {alice_dir}.")
    mask = (log.alice_choice == ka) & (log.alice_out == alice_outcome)
    if bob_dir is None:
        used = np.unique(log.bob_choice[mask])
        if len(used) > 1:
            raise ValueError("The selected trials used several Bob settings; pass bob_dir.")
        if len(used) == 0:
            raise EmptySelectionError("Post-selection matched no trials.")
        kb = int(used[0])
        bob_dir = log.bob_settings[kb]
    else:
        kb = log.setting_index("bob", bob_dir)
        if kb is None:
            raise EmptySelectionError(f"The log contains no trials with bob setting {bob_dir}.")
    mask &= log.bob_choice == kb
    if not np.any(mask):
        raise EmptySelectionError("Post-selection matched no trials.")

    collapsed = collapse(singlet(), tensor_op(outcome_projector(alice_dir, alice_outcome), np.eye(2)))
    bob_state = partial_trace(DensityOperator.from_state(collapsed), (2, 2), keep=1)
    prediction = OutcomeDistribution(
        [(beta, bob_state.probability(outcome_projector(bob_dir, beta))) for beta in OUTCOMES]
    )
    return PostSelection(
        record=_record(log.bob_out[mask], log.seed),
        prediction=prediction,
        bob_dir=bob_dir,
        selected=int(np.count_nonzero(mask)),
    )
