"""Interval matrices stored as a center matrix plus a nonnegative radius."""
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import BoundsInverted, NotSymmetric
from .linalg import as_matrix, is_symmetric, max_norm, symmetric_eigenvalues


@dataclass(frozen=True)
class IntervalMatrix:
    """The set of matrices ``A`` with ``|A - center| <= radius`` entrywise."""

    center: np.ndarray
    radius: np.ndarray

    def __post_init__(self):
        center = as_matrix(self.center)
        radius = as_matrix(self.radius)
        if center.shape != radius.shape:
            raise ValueError(f"center {center.shape} and radius {radius.shape} differ in shape")
        if np.any(radius < 0):
            raise BoundsInverted("radius has negative entries")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", radius)

    @property
    def dim(self):
        return self.center.shape[0]

    @property
    def lower(self):
        return self.center - self.radius

    @property
    def upper(self):
        return self.center + self.radius

    def bounds(self):
        return self.lower, self.upper

    @classmethod
    def from_bounds(cls, lower, upper):
        lo, hi = as_matrix(lower), as_matrix(upper)
        if lo.shape != hi.shape:
            raise ValueError(f"bounds differ in shape: {lo.shape} vs {hi.shape}")
        bad = np.argwhere(lo > hi)
        if bad.size:
            i, j = bad[0]
            raise BoundsInverted(f"lower[{i}, {j}] = {lo[i, j]} exceeds upper = {hi[i, j]}")
        return cls(0.5 * (hi + lo), 0.5 * (hi - lo))

    @classmethod
    def from_center(cls, center, delta, epsilon=1.0):
        """``[center - epsilon*delta, center + epsilon*delta]``."""
        if epsilon < 0:
            raise ValueError("epsilon must be nonnegative")
        return cls(center, epsilon * as_matrix(delta))

    def contains(self, M, tol=DEFAULT_TOLERANCES.membership):
        M = np.asarray(M, dtype=float)
        if M.shape != self.center.shape:
            raise ValueError(f"matrix shape {M.shape} does not match {self.center.shape}")
        return bool(np.all(np.abs(M - self.center) <= self.radius + tol))

    def symmetrized_center(self, tol=DEFAULT_TOLERANCES):
        """The center as an exactly symmetric matrix, or NotSymmetric."""
        if not is_symmetric(self.center, tol):
            raise NotSymmetric(
                f"center asymmetry {max_norm(self.center - self.center.T):.3e} exceeds tolerance")
        return 0.5 * (self.center + self.center.T)


def is_stable_symmetric_member(M, tol=DEFAULT_TOLERANCES):
    """True iff every eigenvalue of the symmetric matrix ``M`` is below ``-tol.stability``."""
    return bool(symmetric_eigenvalues(M, tol)[-1] < -tol.stability)
