"""Test measurement: collapse, density operators, the von Neumann mixture and pre-measurement"""
import sys

sys.path.append(".")

import numpy as np
import pytest

from qcatalog.exceptions import DimensionMismatchError, ImpossibleOutcomeError, NotSelfAdjointError
from qcatalog.hilbert import (
    StateVector,
    born_probability,
    create_observable,
    expectation_value,
    random_hermitian,
    random_state,
    spectral_decompose,
    tensor_op,
)
from qcatalog.measurement import (
    DensityOperator,
    agreement_residual,
    collapse,
    interference_norm,
    partial_trace,
    premeasurement,
    premeasurement_unitary,
    sample_measurement,
    von_neumann_mixture,
)
from qcatalog.prediction import state_distribution
from qcatalog.utils import create_generator

NUM_PAIRS = 200


def random_degenerate_observable(dim, rng):
    """Random eigenbasis with eigenvalue 1 repeated on the first two directions."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, _ = np.linalg.qr(z)
    values = np.array([1.0, 1.0] + list(range(2, dim)), dtype=float)
    return spectral_decompose(q @ np.diag(values) @ q.conj().T)


def test_collapse_projects_and_normalizes():
    obs = spectral_decompose(np.diag([1.0, 1.0, -1.0]))
    state = StateVector([0.6, 0.0, 0.8])
    post = collapse(state, obs.projectors[1])
    assert post.isclose(StateVector.basis(3, 0))
    post = collapse(state, obs.projectors[0])
    assert post.isclose(StateVector.basis(3, 2))


def test_collapse_on_impossible_outcome():
    with pytest.raises(ImpossibleOutcomeError) as exc_info:
        collapse(StateVector.basis(2, 0), np.diag([0.0, 1.0]))
    assert "impossible outcome" in str(exc_info.value)


def test_sample_measurement_is_seeded():
    state = StateVector([1, 1, 1], normalize=True)
    obs = create_observable("number_operator", dim=3)
    first = sample_measurement(state, obs, seed=8)
    again = sample_measurement(state, obs, seed=8)
    assert first.eigenvalue == again.eigenvalue
    assert first.probability == pytest.approx(1 / 3)
    k = obs.index_of(first.eigenvalue)
    assert first.post_state.isclose(StateVector.basis(3, k), up_to_phase=True)


def test_eigenstate_gives_point_mass():
    obs = create_observable("sigma_x")
    eigenstate = StateVector(obs.eigenspace_basis(1)[0])
    dist = state_distribution(eigenstate, obs)
    assert np.allclose(dist.probabilities, [0.0, 1.0], atol=1e-12)
    assert sample_measurement(eigenstate, obs, seed=0).eigenvalue == pytest.approx(1.0)


def test_density_operator_validation():
    with pytest.raises(ValueError):
        DensityOperator(np.eye(2))
    with pytest.raises(ValueError):
        DensityOperator(np.diag([1.5, -0.5]))
    with pytest.raises(NotSelfAdjointError):
        DensityOperator([[0.5, 0.5], [0.0, 0.5]])


def test_density_operator_basics():
    rho = DensityOperator.from_state(StateVector([1, 1], normalize=True))
    assert rho.purity() == pytest.approx(1.0)
    assert rho.expectation(create_observable("sigma_x")) == pytest.approx(1.0)
    mixed = DensityOperator.maximally_mixed(4)
    assert mixed.purity() == pytest.approx(0.25)
    assert mixed.probability(np.diag([1.0, 1.0, 0.0, 0.0])) == pytest.approx(0.5)


def test_condition_matches_collapse():
    rng = create_generator(21)
    for _ in range(20):
        state = random_state(3, rng)
        p = spectral_decompose(random_hermitian(3, rng)).projectors[0]
        rho = DensityOperator.from_state(state).condition(p)
        assert rho.isclose(DensityOperator.from_state(collapse(state, p)))
    with pytest.raises(ImpossibleOutcomeError):
        DensityOperator.from_state(StateVector.basis(2, 0)).condition(np.diag([0.0, 1.0]))


def test_partial_trace():
    a = StateVector([1, 1j], normalize=True)
    b = StateVector([0.6, 0.8])
    rho = DensityOperator.from_state(StateVector(np.kron(a.amplitudes, b.amplitudes)))
    assert partial_trace(rho, (2, 2), keep="A").isclose(DensityOperator.from_state(a))
    assert partial_trace(rho, (2, 2), keep=1).isclose(DensityOperator.from_state(b))
    singlet = StateVector([0, 1, -1, 0], normalize=True)
    reduced = partial_trace(DensityOperator.from_state(singlet), (2, 2), keep=0)
    assert reduced.isclose(DensityOperator.maximally_mixed(2))
    with pytest.raises(DimensionMismatchError):
        partial_trace(rho, (3, 2))
    with pytest.raises(ValueError):
        partial_trace(rho, (2, 2), keep=2)


def test_mixture_is_probability_weighted_collapse():
    state = StateVector([0.6, 0.8j])
    obs = create_observable("sigma_z")
    mixture = von_neumann_mixture(state, obs)
    assert np.allclose(mixture.matrix, np.diag([0.36, 0.64]))
    assert interference_norm(DensityOperator.from_state(state), obs) == pytest.approx(2 * 0.36 * 0.64)
    assert interference_norm(mixture, obs) == 0.0


def test_equal_superposition_agreement():
    state = StateVector([1, 1], normalize=True)
    assert agreement_residual(state, create_observable("sigma_z")) < 1e-9


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_premeasurement_reduces_to_mixture(dim):
    rng = create_generator(300 + dim)
    for case in range(NUM_PAIRS):
        state = random_state(dim, rng)
        if case % 2:
            obs = spectral_decompose(random_hermitian(dim, rng))
        else:
            obs = random_degenerate_observable(dim, rng)
        assert agreement_residual(state, obs) < 1e-9
        assert agreement_residual(state, obs, apparatus_dim=len(obs) + 1) < 1e-9
        assert interference_norm(von_neumann_mixture(state, obs), obs) < 1e-20


def test_premeasurement_unitary():
    obs = create_observable("number_operator", dim=3)
    u = premeasurement_unitary(obs, apparatus_dim=4, ready_index=1)
    assert np.allclose(u.conj().T @ u, np.eye(12))
    compound = premeasurement(StateVector.basis(3, 2), obs, StateVector.basis(4, 1))
    expected = np.kron(StateVector.basis(3, 2).amplitudes, StateVector.basis(4, 2).amplitudes)
    assert compound.isclose(StateVector(expected))
    with pytest.raises(ValueError):
        premeasurement_unitary(obs, apparatus_dim=2)
    with pytest.raises(ValueError):
        premeasurement(StateVector.basis(3, 0), obs, StateVector([1, 1, 0, 0], normalize=True))


def test_pointer_reading_reproduces_born_rule():
    rng = create_generator(400)
    for case in range(NUM_PAIRS // 2):
        dim = 2 + case % 3
        state = random_state(dim, rng)
        obs = random_degenerate_observable(dim, rng) if case % 2 else spectral_decompose(random_hermitian(dim, rng))
        apparatus_dim = len(obs)
        compound = premeasurement(state, obs, StateVector.basis(apparatus_dim, 0))
        for k, term in enumerate(obs.spectrum):
            pointer = StateVector.basis(apparatus_dim, k).projector()
            reading = born_probability(compound, tensor_op(np.eye(dim), pointer))
            assert abs(reading - born_probability(state, term.projector)) <= 1e-10


def test_mixture_keeps_distribution_and_expectation():
    rng = create_generator(401)
    for case in range(NUM_PAIRS // 2):
        dim = 2 + case % 3
        state = random_state(dim, rng)
        obs = spectral_decompose(random_hermitian(dim, rng))
        mixture = von_neumann_mixture(state, obs)
        dist = state_distribution(state, obs)
        for term, p in zip(obs.spectrum, dist.probabilities):
            assert abs(mixture.probability(term.projector) - p) <= 1e-10
        assert abs(mixture.expectation(obs) - expectation_value(state, obs)) <= 1e-10
        assert abs(mixture.expectation(obs) - dist.mean()) <= 1e-10


def test_repeated_measurement_gives_same_result():
    rng = create_generator(402)
    for case in range(NUM_PAIRS // 2):
        dim = 2 + case % 3
        state = random_state(dim, rng)
        obs = random_degenerate_observable(dim, rng) if case % 2 else spectral_decompose(random_hermitian(dim, rng))
        first = sample_measurement(state, obs, seed=case)
        second = sample_measurement(first.post_state, obs, seed=case, stream=1)
        assert second.eigenvalue == first.eigenvalue
        assert second.probability == pytest.approx(1.0, abs=1e-10)
        assert second.post_state.isclose(first.post_state, up_to_phase=True)
