"""The dice, epr, bell, measure and lattice commands

Every command takes a :class:`RunConfig` plus its own keyword options and returns a
:class:`~qcatalog.cli.report.Report`. Self-checks on exact quantities raise
:class:`~qcatalog.exceptions.InvariantViolationError`.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from tqdm import tqdm

from ..epr.direction import Direction, angle_between
from ..epr.singlet_state import (
    LHV_BOUND,
    TSIRELSON_BOUND,
    chsh,
    correlation,
    joint_distribution,
    joint_distribution_closed_form,
    lhv_chsh_bound,
)
from ..epr.trials import marginal_record, postselect, run_trial_blocks
from ..exceptions import EmptySelectionError, InvariantViolationError
from ..lattice.axioms import CLASSICAL_OPS, de_morgan_holds, orthocomplement_axioms
from ..lattice.boolean import distributivity_holds, non_distributive_witness
from ..lattice.classical import c_distributivity_holds, c_events, c_triples
from ..lattice.subspace import commutator_norm, join, meet, random_subspace
from ..measurement.density import DensityOperator
from ..measurement.mixture import agreement_residual, interference_norm, von_neumann_mixture
from ..measurement.projective import sample_measurement
from ..prediction.binomial import binomial_table
from ..prediction.distribution import OutcomeDistribution, state_distribution
from ..prediction.frequency import repeat_experiment, sample_frequencies, sigma
from ..utils.random import create_generator
from .registry import register_command
from .report import Report, Table
from .specs import parse_observable, parse_state

__all__ = ["RunConfig"]

_logger = logging.getLogger(__name__)

TOL_EXACT = 1e-12
TOL_IDENTITY = 1e-9
AXIOMS = ("meet_zero", "join_one", "involution", "order_reversing")


@dataclass(frozen=True)
class RunConfig:
    """
    Settings shared by every command.

    Args:
        seed (int): base seed of all sampling, in [0, 2**64).
        trials (int): number of sampled trials (dice: repetitions of the throw series).
        output_format (str): ``csv`` or ``json``.
        output_path (str): report file; None writes to standard output.
        progress (bool): show tqdm progress bars on stderr.
        num_workers (int): threads for EPR trial blocks.
        block_size (int): trials per EPR block; block k draws from seed stream k.
    """

    seed: int = 42
    trials: int = 100_000
    output_format: str = "csv"
    output_path: Optional[str] = None
    progress: bool = False
    num_workers: int = 1
    block_size: int = 100_000

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must lie in [0, 2**64), but got {self.seed}.")
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, but got {self.trials}.")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"Unsupported output format {self.output_format}, expected csv or json.")
        if self.num_workers < 1 or self.block_size < 1:
            raise ValueError("num_workers and block_size must be positive.")

    @classmethod
    def from_args(cls, args):
        return cls(
            seed=args.seed,
            trials=args.trials,
            output_format=args.format,
            output_path=args.out or None,
            progress=args.progress,
            num_workers=args.num_workers,
            block_size=args.block_size,
        )


def _z(observed, expected, sd):
    if observed is None or sd is None:
        return None
    if sd == 0.0:
        if abs(observed - expected) <= TOL_IDENTITY:
            return 0.0
        # a deterministic cell that disagrees has no finite z-score
        _logger.warning(f"Observed {observed} differs from the deterministic value {expected}.")
        return None
    return (observed - expected) / sd


# ---------------------------------------------------------------------------- dice


@register_command
def cmd_dice(cfg: RunConfig, throws=12, face_probability="1/6", sampled=True):
    """Probability of exactly n sixes in ``throws`` throws, exact and sampled."""
    exact = binomial_table(throws, face_probability)
    total = sum(p for _, p in exact)
    if total != 1:
        raise InvariantViolationError(f"Binomial table sums to {total}, not 1.")

    report = Report("dice", cfg.seed, meta={"throws": throws, "face_probability": str(face_probability)})
    columns = ["n", "p_exact", "p"]
    if sampled:
        columns += ["frequency", "sigma", "z"]
        p_face = float(Fraction(str(face_probability)))
        face = OutcomeDistribution([(0.0, 1.0 - p_face), (1.0, p_face)])
        counts = repeat_experiment(face, throws, cfg.trials, cfg.seed)[:, 1]
        freq = np.bincount(counts, minlength=throws + 1) / cfg.trials
    table = report.add_table(Table("binomial", columns))
    for n, p in exact:
        row = [n, p, float(p)]
        if sampled:
            sd = sigma(float(p), cfg.trials)
            row += [float(freq[n]), sd, _z(float(freq[n]), float(p), sd)]
        table.add_row(*row)
    return report


# ---------------------------------------------------------------------------- epr


def _directions(angles, wing):
    dirs = [Direction.planar(a) for a in angles]
    for d1, d2 in itertools.combinations(dirs, 2):
        if d1.isclose(d2):
            raise ValueError(f"Duplicate {wing} setting {d1}.")
    if not dirs:
        raise ValueError(f"{wing} needs at least one setting.")
    return dirs


def _pair_counts(log):
    """counts[i, j, k]: trials with settings (i, j) and outcome pair k in (-1,-1), (-1,+1), (+1,-1), (+1,+1)."""
    counts = np.zeros((len(log.alice_settings), len(log.bob_settings), 4), dtype=np.int64)
    k = (log.alice_out > 0).astype(np.int64) * 2 + (log.bob_out > 0).astype(np.int64)
    np.add.at(counts, (log.alice_choice, log.bob_choice, k), 1)
    return counts


def _sampled_correlation(cell):
    n = int(cell.sum())
    if n == 0:
        return 0, None, None
    e = float(cell[0] - cell[1] - cell[2] + cell[3]) / n
    return n, e, math.sqrt(max(1.0 - e * e, 0.0) / n)


def _check_pair(a, b):
    jd = joint_distribution(a, b)
    closed = joint_distribution_closed_form(a, b)
    if not np.allclose(jd.table, closed.table, atol=TOL_IDENTITY, rtol=0.0):
        raise InvariantViolationError(f"Born-rule joint distribution for {a}, {b} differs from the closed form.")
    for axis in (0, 1):
        if not np.allclose(jd.marginal(axis).probabilities, 0.5, atol=TOL_EXACT, rtol=0.0):
            raise InvariantViolationError(f"Marginal of wing {axis} at settings {a}, {b} is not (1/2, 1/2).")
    return jd


@register_command
def cmd_epr(cfg: RunConfig, alice_angles=(0.0, math.pi / 3, math.pi / 2), bob_angles=(0.0, math.pi / 3, math.pi / 2),
            trial_log=None):
    """Singlet trials on a planar direction grid: counts, marginals, no-signaling and post-selection."""
    alice, bob = _directions(alice_angles, "alice"), _directions(bob_angles, "bob")
    log = run_trial_blocks(
        alice, bob, cfg.trials, cfg.seed, block_size=cfg.block_size, num_workers=cfg.num_workers, progress=cfg.progress
    )
    if trial_log:
        log.to_csv(trial_log)
    counts = _pair_counts(log)
    report = Report("epr", cfg.seed, meta={"alice_angles": list(alice_angles), "bob_angles": list(bob_angles)})

    settings = report.add_table(
        Table(
            "settings",
            ["alice_theta", "alice_phi", "bob_theta", "bob_phi", "trials", "n_mm", "n_mp", "n_pm", "n_pp",
             "same_outcome", "p_same_exact", "correlation", "correlation_exact", "sigma", "z"],
        )
    )
    for (i, a), (j, b) in itertools.product(enumerate(alice), enumerate(bob)):
        jd = _check_pair(a, b)
        p_same = jd.probability(-1, -1) + jd.probability(1, 1)
        cell = counts[i, j]
        same = int(cell[0] + cell[3])
        if p_same <= TOL_EXACT and same:
            raise InvariantViolationError(
                f"{same} same-outcome trials at settings {a}, {b} with p_same = {p_same:.3e}."
            )
        n, e, sd = _sampled_correlation(cell)
        e_exact = correlation(a, b)
        if abs(e_exact + math.cos(angle_between(a, b))) > TOL_IDENTITY:
            raise InvariantViolationError(f"E({a}, {b}) = {e_exact} differs from -cos of the angle.")
        settings.add_row(a.theta, a.phi, b.theta, b.phi, n, *map(int, cell), same, p_same, e, e_exact, sd,
                         _z(e, e_exact, sd))

    marginals = report.add_table(
        Table("marginals", ["wing", "theta", "phi", "other_theta", "other_phi", "trials", "p_plus", "p_plus_exact",
                            "sigma", "z"])
    )
    no_signaling = report.add_table(
        Table("no_signaling", ["wing", "theta", "phi", "other_theta_1", "other_phi_1", "other_theta_2", "other_phi_2",
                               "delta", "sigma", "z"])
    )
    for wing, own, other in (("alice", alice, bob), ("bob", bob, alice)):
        for d in own:
            records = []
            for o in other:
                try:
                    rec = marginal_record(log, wing, d, o)
                except EmptySelectionError:
                    marginals.add_row(wing, d.theta, d.phi, o.theta, o.phi, 0, None, 0.5, None, None)
                    continue
                f, sd = rec.frequency(1), sigma(0.5, rec.trials)
                marginals.add_row(wing, d.theta, d.phi, o.theta, o.phi, rec.trials, f, 0.5, sd, _z(f, 0.5, sd))
                records.append((o, rec))
            for (o1, r1), (o2, r2) in itertools.combinations(records, 2):
                delta = r1.frequency(1) - r2.frequency(1)
                sd = math.sqrt(0.25 / r1.trials + 0.25 / r2.trials)
                no_signaling.add_row(
                    wing, d.theta, d.phi, o1.theta, o1.phi, o2.theta, o2.phi, delta, sd, _z(delta, 0.0, sd)
                )

    post = report.add_table(
        Table("postselection", ["alice_theta", "alice_phi", "alice_outcome", "bob_theta", "bob_phi", "selected",
                                "bob_plus", "bob_plus_predicted", "sigma", "z"])
    )
    for a, alpha, b in itertools.product(alice, (-1, 1), bob):
        try:
            sel = postselect(log, alpha, a, b)
        except EmptySelectionError:
            post.add_row(a.theta, a.phi, alpha, b.theta, b.phi, 0, None, None, None, None)
            continue
        f, p = sel.record.frequency(1), sel.prediction.probability(1)
        sd = sigma(p, sel.selected)
        post.add_row(a.theta, a.phi, alpha, b.theta, b.phi, sel.selected, f, p, sd, _z(f, p, sd))
    return report


# ---------------------------------------------------------------------------- bell


@register_command
def cmd_bell(cfg: RunConfig, chsh_angles=(0.0, math.pi / 2, math.pi / 4, 3 * math.pi / 4)):
    """CHSH S for planar settings (a, a', b, b'): exact, sampled and the two bounds."""
    if len(chsh_angles) != 4:
        raise ValueError(f"chsh_angles needs exactly 4 angles (a, a', b, b'), but got {len(chsh_angles)}.")
    a, a2, b, b2 = (Direction.planar(x) for x in chsh_angles)
    s_exact = chsh(a, a2, b, b2)
    bound = lhv_chsh_bound()
    if bound != LHV_BOUND:
        raise InvariantViolationError(f"Deterministic local strategies reach |S| = {bound}, expected {LHV_BOUND}.")
    if abs(s_exact) > TSIRELSON_BOUND + TOL_IDENTITY:
        raise InvariantViolationError(f"|S| = {abs(s_exact)} exceeds the quantum bound {TSIRELSON_BOUND}.")

    log = run_trial_blocks(
        [a, a2], [b, b2], cfg.trials, cfg.seed, block_size=cfg.block_size, num_workers=cfg.num_workers,
        progress=cfg.progress,
    )
    counts = _pair_counts(log)
    report = Report("bell", cfg.seed, meta={"chsh_angles": list(chsh_angles)})
    table = report.add_table(
        Table("correlations", ["alice_theta", "bob_theta", "sign", "trials", "correlation", "correlation_exact",
                               "sigma"])
    )
    s_sampled, var, empty = 0.0, 0.0, False
    for (i, x), (j, y) in itertools.product(enumerate((a, a2)), enumerate((b, b2))):
        sign = -1 if (i, j) == (0, 1) else 1
        n, e, sd = _sampled_correlation(counts[i, j])
        if n:
            s_sampled += sign * e
            var += sd * sd
        else:
            empty = True
        table.add_row(x.theta, y.theta, sign, n, e, correlation(x, y), sd)

    s_sampled, s_sigma = (None, None) if empty else (s_sampled, math.sqrt(var))
    summary = report.add_table(Table("chsh", ["quantity", "value"]))
    summary.add_row("S_exact", s_exact)
    summary.add_row("S_sampled", s_sampled)
    summary.add_row("S_sigma", s_sigma)
    summary.add_row("z", _z(s_sampled, s_exact, s_sigma))
    summary.add_row("lhv_bound", LHV_BOUND)
    summary.add_row("lhv_brute_force", bound)
    summary.add_row("tsirelson_bound", TSIRELSON_BOUND)
    summary.add_row("verdict", "violated" if abs(s_exact) > LHV_BOUND + TOL_IDENTITY else "not violated")
    _logger.info(f"S = {s_exact:.6f} (sampled {s_sampled} +- {s_sigma})")
    return report


# ---------------------------------------------------------------------------- measure


_DEFAULT_STATE = '{"amplitudes": [[0.7071067811865476, 0], [0.7071067811865476, 0]]}'
_DEFAULT_OBSERVABLE = '{"name": "sigma_z"}'


@register_command
def cmd_measure(cfg: RunConfig, state=_DEFAULT_STATE, observable=_DEFAULT_OBSERVABLE, apparatus_dim=None):
    """The measurement chain for one state and observable: Born distribution, mixture and pre-measurement."""
    xi = parse_state(state)
    obs = parse_observable(observable)
    dist = state_distribution(xi, obs)
    total = sum(dist.probabilities)
    if abs(total - 1.0) > TOL_IDENTITY:
        raise InvariantViolationError(f"Born probabilities sum to {total!r}.")

    record = sample_frequencies(dist, cfg.trials, cfg.seed)
    report = Report("measure", cfg.seed, meta={"dim": xi.dim, "num_outcomes": len(obs)})
    table = report.add_table(Table("distribution", ["eigenvalue", "multiplicity", "probability", "frequency",
                                                    "sigma"]))
    for term, p in zip(obs.spectrum, dist.probabilities):
        table.add_row(term.eigenvalue, term.multiplicity, p, record.frequency(term.eigenvalue), sigma(p, cfg.trials))

    mixture = von_neumann_mixture(xi, obs)
    table = report.add_table(Table("mixture", ["row", "col", "re", "im"]))
    for r, c in itertools.product(range(mixture.dim), repeat=2):
        table.add_row(r, c, float(mixture.matrix[r, c].real), float(mixture.matrix[r, c].imag))

    before = interference_norm(DensityOperator.from_state(xi), obs)
    after = interference_norm(mixture, obs)
    residual = agreement_residual(xi, obs, apparatus_dim)
    shot = sample_measurement(xi, obs, cfg.seed, stream=1)
    checks = report.add_table(Table("checks", ["quantity", "value", "tolerance", "passed"]))
    checks.add_row("probability_sum", total, TOL_IDENTITY, abs(total - 1.0) <= TOL_IDENTITY)
    checks.add_row("expectation", dist.mean(), None, None)
    checks.add_row("interference_before", before, None, None)
    checks.add_row("interference_after", after, TOL_EXACT, after <= TOL_EXACT)
    checks.add_row("agreement_residual", residual, TOL_IDENTITY, residual <= TOL_IDENTITY)
    checks.add_row("mixture_purity", mixture.purity(), None, None)
    checks.add_row("single_shot_eigenvalue", shot.eigenvalue, None, None)
    if after > TOL_EXACT or residual > TOL_IDENTITY:
        raise InvariantViolationError(
            f"Measurement self-check failed: interference after mixing {after:.3e}, residual {residual:.3e}."
        )
    return report


# ---------------------------------------------------------------------------- lattice


@register_command
def cmd_lattice(cfg: RunConfig, dim=2, num_subspaces=500, classical_size=4):
    """Orthocomplement axioms, De Morgan and distributivity on random subspaces, plus the classical comparison."""
    if dim < 2:
        raise ValueError(f"dim must be at least 2, but got {dim}.")
    if num_subspaces < 1:
        raise ValueError(f"num_subspaces must be positive, but got {num_subspaces}.")
    rng = create_generator(cfg.seed)
    passed = {name: 0 for name in AXIOMS + ("de_morgan", "distributivity")}
    for _ in tqdm(range(num_subspaces), disable=not cfg.progress, desc="subspaces"):
        e, f, h = (random_subspace(dim, rng) for _ in range(3))
        results = orthocomplement_axioms(e, f)
        # E <= E | F, so order reversal is tested on a comparable pair as well
        results["order_reversing"] = results["order_reversing"] and orthocomplement_axioms(e, e | f)["order_reversing"]
        results["de_morgan"] = de_morgan_holds(e, f)
        results["distributivity"] = distributivity_holds(e, f, h)
        for name, ok in results.items():
            passed[name] += bool(ok)

    events = c_events(classical_size)
    c_passed = {name: 0 for name in AXIOMS + ("de_morgan",)}
    for e, f in itertools.product(events, repeat=2):
        results = orthocomplement_axioms(e, f, CLASSICAL_OPS)
        results["de_morgan"] = de_morgan_holds(e, f, CLASSICAL_OPS)
        for name, ok in results.items():
            c_passed[name] += bool(ok)
    c_triple_count = len(events) ** 3
    c_distributive = sum(c_distributivity_holds(*t) for t in c_triples(classical_size))

    report = Report("lattice", cfg.seed, meta={"dim": dim, "num_subspaces": num_subspaces,
                                               "classical_size": classical_size})
    table = report.add_table(Table("axioms", ["lattice", "check", "cases", "passed", "failed"]))
    for name, ok in passed.items():
        table.add_row("subspace", name, num_subspaces, ok, num_subspaces - ok)
    cases = len(events) ** 2
    for name, ok in c_passed.items():
        table.add_row("classical", name, cases, ok, cases - ok)
    table.add_row("classical", "distributivity", c_triple_count, c_distributive, c_triple_count - c_distributive)

    a, b, c = non_distributive_witness(dim)
    left, right = meet(a, join(b, c)), join(meet(a, b), meet(a, c))
    witness = report.add_table(Table("witness", ["expression", "rank", "equals_A", "is_zero"]))
    for label, s in (("A", a), ("B", b), ("C", c), ("B or C", join(b, c)), ("A and (B or C)", left),
                     ("A and B", meet(a, b)), ("A and C", meet(a, c)), ("(A and B) or (A and C)", right)):
        witness.add_row(label, s.rank, s == a, s.is_zero())
    report.meta["witness_commutator_norm"] = commutator_norm(a, b)

    failed = [name for name in AXIOMS + ("de_morgan",) if passed[name] != num_subspaces]
    failed += [f"classical {name}" for name in c_passed if c_passed[name] != cases]
    if c_distributive != c_triple_count:
        failed.append("classical distributivity")
    if not (left == a and right.is_zero()):
        failed.append("witness")
    if failed:
        raise InvariantViolationError(f"Lattice self-check failed: {', '.join(failed)}.")
    return report
