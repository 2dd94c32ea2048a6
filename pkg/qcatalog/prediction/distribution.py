"""Outcome distributions predicted from states"""
from typing import Sequence, Tuple

import numpy as np

from ..exceptions import DimensionMismatchError
from ..hilbert.observables import Observable
from ..hilbert.states import StateVector, born_probability

__all__ = [
    "OutcomeDistribution",
    "JointDistribution",
    "uniform_distribution",
    "state_distribution",
    "independent_product",
]

TOL_SUM = 1e-9


class OutcomeDistribution:
    """
    Probabilities for every possible result of one measurement.

    Args:
        outcomes: sequence of (label, probability) pairs with strictly increasing real labels.
    """

    def __init__(self, outcomes: Sequence[Tuple[float, float]]):
        outcomes = [(float(label), float(prob)) for label, prob in outcomes]
        if not outcomes:
            raise ValueError("A distribution needs at least one outcome.")
        labels = [label for label, _ in outcomes]
        if any(b <= a for a, b in zip(labels, labels[1:])):
            raise ValueError(f"Labels must be strictly increasing, but got {labels}.")
        if any(prob < -TOL_SUM for _, prob in outcomes):
            raise ValueError(f"Probabilities must be non-negative, but got {[p for _, p in outcomes]}.")
        outcomes = [(label, max(prob, 0.0)) for label, prob in outcomes]
        total = sum(prob for _, prob in outcomes)
        if abs(total - 1.0) > TOL_SUM:
            raise ValueError(f"Probabilities sum to {total!r}, expected 1 within {TOL_SUM:.0e}.")
        self._outcomes = tuple(outcomes)

    @property
    def outcomes(self):
        return self._outcomes

    @property
    def labels(self):
        return [label for label, _ in self._outcomes]

    @property
    def probabilities(self):
        return [prob for _, prob in self._outcomes]

    def probability(self, label, tol=1e-9):
        for lab, prob in self._outcomes:
            if abs(lab - label) <= tol:
                return prob
        return 0.0

    def mean(self):
        """Expected result sum_i p_i x_i."""
        return sum(label * prob for label, prob in self._outcomes)

    def as_dict(self):
        return dict(self._outcomes)

    def __len__(self):
        return len(self._outcomes)

    def __eq__(self, other):
        if not isinstance(other, OutcomeDistribution):
            return NotImplemented
        return self._outcomes == other.outcomes

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{label:g}: {prob:.6g}" for label, prob in self._outcomes)
        return f"OutcomeDistribution({{{body}}})"


class JointDistribution:
    """
    Distribution over pairs of labels, stored as a ``(len(labels_a), len(labels_b))`` table.

    Args:
        labels_a, labels_b: strictly increasing labels of the two wings.
        table: joint probabilities p(x, y).
        factors: the two marginals, when the joint is known to be their product.
    """

    def __init__(self, labels_a, labels_b, table, factors=None):
        table = np.array(table, dtype=float)
        if table.shape != (len(labels_a), len(labels_b)):
            raise DimensionMismatchError(f"Table shape {table.shape} does not match the label lists.")
        total = float(table.sum())
        if abs(total - 1.0) > TOL_SUM or np.any(table < -TOL_SUM):
            raise ValueError(f"Joint probabilities must be non-negative and sum to 1, got total {total!r}.")
        table.setflags(write=False)
        self._labels_a = [float(x) for x in labels_a]
        self._labels_b = [float(y) for y in labels_b]
        self._table = table
        self._factors = factors

    @property
    def labels_a(self):
        return self._labels_a

    @property
    def labels_b(self):
        return self._labels_b

    @property
    def table(self):
        return self._table

    def probability(self, x, y):
        return float(self._table[self._labels_a.index(float(x)), self._labels_b.index(float(y))])

    def items(self):
        """((x, y), p) in canonical order: x major, y minor, both ascending."""
        return [
            ((x, y), float(self._table[i, j]))
            for i, x in enumerate(self._labels_a)
            for j, y in enumerate(self._labels_b)
        ]

    def marginal(self, axis):
        """Marginal of wing 0 (``a``) or wing 1 (``b``)."""
        if self._factors is not None:
            return self._factors[axis]
        if axis == 0:
            return OutcomeDistribution(zip(self._labels_a, self._table.sum(axis=1)))
        if axis == 1:
            return OutcomeDistribution(zip(self._labels_b, self._table.sum(axis=0)))
        raise ValueError(f"axis must be 0 or 1, but got {axis}.")

    def __repr__(self):
        body = ", ".join(f"({x:g}, {y:g}): {p:.6g}" for (x, y), p in self.items())
        return f"JointDistribution({{{body}}})"


def uniform_distribution(labels):
    labels = sorted(labels)
    return OutcomeDistribution([(label, 1.0 / len(labels)) for label in labels])


def state_distribution(state: StateVector, obs: Observable) -> OutcomeDistribution:
    """Born-rule probability of every eigenvalue of ``obs`` in ``state``."""
    if state.dim != obs.dim:
        raise DimensionMismatchError(f"Dimension mismatch: state {state.dim} vs observable {obs.dim}.")
    return OutcomeDistribution([(t.eigenvalue, born_probability(state, t.projector)) for t in obs.spectrum])


def independent_product(a: OutcomeDistribution, b: OutcomeDistribution) -> JointDistribution:
    """p(x, y) = p_a(x) * p_b(y); the marginals returned are ``a`` and ``b`` themselves."""
    table = np.outer(a.probabilities, b.probabilities)
    return JointDistribution(a.labels, b.labels, table, factors=(a, b))
