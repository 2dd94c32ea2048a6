"""Measurement directions on the Bloch sphere"""
import math
from dataclasses import dataclass

import numpy as np

__all__ = ["Direction", "angle_between"]

_TWO_PI = 2.0 * math.pi
# slack for angles read back from 12-significant-digit text
_ANGLE_SLACK = 1e-9


@dataclass(frozen=True)
class Direction:
    """
    Unit vector given by polar angle ``theta`` in [0, pi] and azimuth ``phi`` in [0, 2 pi).

    ``theta = 0`` is "vertical" (spin-z); outcome +1 means "up" along the direction.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta, phi = float(self.theta), float(self.phi)
        if not -_ANGLE_SLACK <= theta <= math.pi + _ANGLE_SLACK:
            raise ValueError(f"theta must lie in [0, pi], but got {theta}.")
        if not -_ANGLE_SLACK <= phi <= _TWO_PI + _ANGLE_SLACK:
            raise ValueError(f"phi must lie in [0, 2 pi), but got {phi}.")
        object.__setattr__(self, "theta", min(max(theta, 0.0), math.pi))
        object.__setattr__(self, "phi", max(phi, 0.0) % _TWO_PI)

    @classmethod
    def planar(cls, angle):
        """Direction in the x-z plane at ``angle`` radians from vertical, any real angle accepted."""
        a = float(angle) % _TWO_PI
        if a <= math.pi:
            return cls(a, 0.0)
        return cls(_TWO_PI - a, math.pi)

    def unit_vector(self):
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    def isclose(self, other, atol=1e-9):
        return float(np.max(np.abs(self.unit_vector() - other.unit_vector()))) <= atol


def angle_between(a: Direction, b: Direction) -> float:
    return float(np.arccos(np.clip(np.dot(a.unit_vector(), b.unit_vector()), -1.0, 1.0)))
