"""The Boolean lattice of subsets of a finite set, kept as the classical point of comparison"""
import itertools
from dataclasses import dataclass, field
from typing import FrozenSet

__all__ = [
    "ClassicalEvent",
    "c_leq",
    "c_meet",
    "c_join",
    "c_complement",
    "c_distributivity_holds",
    "c_events",
    "c_triples",
]


@dataclass(frozen=True)
class ClassicalEvent:
    universe_size: int
    members: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.universe_size < 1:
            raise ValueError(f"universe_size must be positive, but got {self.universe_size}.")
        members = frozenset(int(m) for m in self.members)
        bad = [m for m in members if not 0 <= m < self.universe_size]
        if bad:
            raise ValueError(f"Members {sorted(bad)} are outside the universe of size {self.universe_size}.")
        object.__setattr__(self, "members", members)

    @classmethod
    def empty(cls, universe_size):
        return cls(universe_size, frozenset())

    @classmethod
    def full(cls, universe_size):
        return cls(universe_size, frozenset(range(universe_size)))


def _check_universe(a, b):
    if a.universe_size != b.universe_size:
        raise ValueError(f"Universe mismatch: {a.universe_size} vs {b.universe_size}.")


def c_leq(a: ClassicalEvent, b: ClassicalEvent) -> bool:
    _check_universe(a, b)
    return a.members <= b.members


def c_meet(a: ClassicalEvent, b: ClassicalEvent) -> ClassicalEvent:
    _check_universe(a, b)
    return ClassicalEvent(a.universe_size, a.members & b.members)


def c_join(a: ClassicalEvent, b: ClassicalEvent) -> ClassicalEvent:
    _check_universe(a, b)
    return ClassicalEvent(a.universe_size, a.members | b.members)


def c_complement(a: ClassicalEvent) -> ClassicalEvent:
    return ClassicalEvent(a.universe_size, frozenset(range(a.universe_size)) - a.members)


def c_distributivity_holds(a: ClassicalEvent, b: ClassicalEvent, c: ClassicalEvent) -> bool:
    return c_meet(a, c_join(b, c)) == c_join(c_meet(a, b), c_meet(a, c))


def c_events(universe_size):
    """All 2**universe_size events, ordered by bitmask."""
    return [
        ClassicalEvent(universe_size, frozenset(i for i in range(universe_size) if mask >> i & 1))
        for mask in range(1 << universe_size)
    ]


def c_triples(universe_size):
    events = c_events(universe_size)
    return itertools.product(events, repeat=3)
