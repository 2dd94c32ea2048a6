"""Test prediction: exact binomial table, outcome distributions and seeded frequencies"""
import sys

sys.path.append(".")

from fractions import Fraction

import numpy as np
import pytest
from scipy import stats

from qcatalog.exceptions import DimensionMismatchError
from qcatalog.hilbert import StateVector, create_observable
from qcatalog.prediction import (
    FrequencyRecord,
    JointDistribution,
    OutcomeDistribution,
    binomial_pmf,
    binomial_pmf_exact,
    binomial_table,
    independent_product,
    repeat_experiment,
    sample_frequencies,
    sigma,
    state_distribution,
    uniform_distribution,
    within_sigma,
)
from qcatalog.utils import create_generator, derive_seed, inverse_cdf_sample, prng_identifier


@pytest.mark.parametrize("n, expected", [(0, 0.112), (1, 0.269), (2, 0.296), (3, 0.197)])
def test_dice_table_values(n, expected):
    assert float(f"{binomial_pmf(n, 12, '1/6'):.3g}") == expected


def test_dice_table_tail():
    p12 = binomial_pmf_exact(12, 12, Fraction(1, 6))
    assert p12 == Fraction(1, 6**12)
    assert float(f"{float(p12):.1g}") == 5e-10


def test_binomial_table_sums_to_one_exactly():
    table = binomial_table(12, "1/6")
    assert [n for n, _ in table] == list(range(13))
    assert sum(p for _, p in table) == 1
    assert max(table, key=lambda row: row[1])[0] == 2


@pytest.mark.parametrize("p", ["1/6", "1/2", "3/7", "0", "1"])
def test_exact_binomial_sums_to_one_for_every_trial_count(p):
    for trials in range(41):
        assert sum(prob for _, prob in binomial_table(trials, p)) == 1


@pytest.mark.parametrize("trials", [1, 5, 12, 30])
@pytest.mark.parametrize("p", [0.0, 0.1, 0.5, 0.9, 1.0])
def test_binomial_against_scipy(trials, p):
    ours = [binomial_pmf(n, trials, p) for n in range(trials + 1)]
    assert np.allclose(ours, stats.binom.pmf(np.arange(trials + 1), trials, p), rtol=1e-12, atol=1e-15)


def test_binomial_rejects_bad_input():
    with pytest.raises(ValueError):
        binomial_pmf_exact(13, 12, "1/6")
    with pytest.raises(ValueError):
        binomial_pmf_exact(0, -1, "1/6")
    with pytest.raises(ValueError):
        binomial_pmf_exact(0, 12, "7/6")


def test_outcome_distribution_validation():
    dist = OutcomeDistribution([(-1, 0.25), (1, 0.75)])
    assert dist.labels == [-1.0, 1.0]
    assert dist.probability(1) == 0.75
    assert dist.probability(0) == 0.0
    assert dist.mean() == pytest.approx(0.5)
    with pytest.raises(ValueError):
        OutcomeDistribution([(1, 0.5), (-1, 0.5)])
    with pytest.raises(ValueError):
        OutcomeDistribution([(0, 0.5), (1, 0.4)])
    with pytest.raises(ValueError):
        OutcomeDistribution([])


def test_state_distribution_is_born_rule():
    dist = state_distribution(StateVector([1, 1j], normalize=True), create_observable("sigma_z"))
    assert dist.labels == [-1.0, 1.0]
    assert np.allclose(dist.probabilities, [0.5, 0.5])
    with pytest.raises(DimensionMismatchError):
        state_distribution(StateVector.basis(3, 0), create_observable("sigma_z"))


def test_independent_product_marginals_are_exact():
    a = OutcomeDistribution([(0, 0.3), (1, 0.7)])
    b = uniform_distribution([3, 1, 2])
    joint = independent_product(a, b)
    assert joint.marginal(0) is a
    assert joint.marginal(1) is b
    assert joint.probability(1, 2) == pytest.approx(0.7 / 3)
    assert [xy for xy, _ in joint.items()][:3] == [(0.0, 1.0), (0.0, 2.0), (0.0, 3.0)]


def test_joint_distribution_marginals():
    joint = JointDistribution([-1, 1], [-1, 1], [[0.1, 0.4], [0.2, 0.3]])
    assert np.allclose(joint.marginal(0).probabilities, [0.5, 0.5])
    assert np.allclose(joint.marginal(1).probabilities, [0.3, 0.7])
    with pytest.raises(ValueError):
        joint.marginal(2)


def test_sample_frequencies_is_reproducible():
    dist = OutcomeDistribution([(1, 1 / 6), (2, 5 / 6)])
    r1 = sample_frequencies(dist, 1000, seed=9)
    r2 = sample_frequencies(dist, 1000, seed=9)
    r3 = sample_frequencies(dist, 1000, seed=9, stream=1)
    assert r1 == r2
    assert r1.counts != r3.counts
    assert sum(r1.counts.values()) == 1000
    assert r1.prng == prng_identifier()


def test_sample_frequencies_within_three_sigma():
    trials = 100_000
    dist = OutcomeDistribution([(0, 5 / 6), (1, 1 / 6)])
    record = sample_frequencies(dist, trials, seed=42)
    assert within_sigma(record.frequency(1), 1 / 6, trials, k=3.0)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_frequencies_converge_over_a_million_trials(seed):
    trials = 1_000_000
    dist = OutcomeDistribution([(0, 0.5), (1, 0.3), (2, 0.2)])
    record = sample_frequencies(dist, trials, seed=seed)
    for label, p in dist.outcomes:
        assert within_sigma(record.frequency(label), p, trials, k=5.0)


def test_impossible_outcomes_are_never_sampled():
    dist = OutcomeDistribution([(0, 0.5), (1, 0.0), (2, 0.5)])
    record = sample_frequencies(dist, 10_000, seed=1)
    assert record.counts[1.0] == 0


def test_repeat_experiment():
    face = OutcomeDistribution([(0, 5 / 6), (1, 1 / 6)])
    counts = repeat_experiment(face, 12, 1000, seed=3)
    assert counts.shape == (1000, 2)
    assert np.all(counts.sum(axis=1) == 12)
    assert np.array_equal(counts, repeat_experiment(face, 12, 1000, seed=3))


def test_frequency_record_validation():
    with pytest.raises(ValueError):
        FrequencyRecord(trials=10, counts={0.0: 4, 1.0: 5}, seed=0)
    with pytest.raises(ValueError):
        FrequencyRecord(trials=0, counts={}, seed=0)


def test_sigma_helpers():
    assert sigma(0.5, 100) == pytest.approx(0.05)
    assert within_sigma(0.0, 0.0, 10)
    assert not within_sigma(0.1, 0.0, 10)


def test_inverse_cdf_sampling():
    # cdf [0.5, 1.0]; a uniform on the boundary belongs to the next outcome
    assert list(inverse_cdf_sample([0.5, 0.5], [0.0, 0.49, 0.5, 0.999])) == [0, 0, 1, 1]
    assert list(inverse_cdf_sample([0.5, 1e-13, 0.5], [0.5, 0.5 + 1e-14])) == [2, 2]
    with pytest.raises(ValueError):
        inverse_cdf_sample([0.0, 0.0], [0.1])


def test_seed_streams():
    assert derive_seed(1, 0) == 1
    assert derive_seed(1, 1) == (1 + 0x9E3779B97F4A7C15) % 2**64
    assert derive_seed(2**64 - 1, 0) == 2**64 - 1
    a = create_generator(5, 2).random(4)
    b = create_generator(5, 2).random(4)
    assert np.array_equal(a, b)
