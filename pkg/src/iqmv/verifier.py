"""
Certification of interval matrices ``[A_m - eps*Delta, A_m + eps*Delta]``.

Non-singularity holds when the radius ``d(A_m, Delta)`` exceeds ``eps``.
QAOA only ever samples a feasible sign pair, so its ``r`` is a lower bound
on the true maximum and its ``d`` an upper bound on the true radius. A QAOA
estimate can therefore prove that a singular matrix lies inside the
interval, but never that none does; certificates need the exact radius.
"""
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .config import DEFAULT_TOLERANCES, brute_limit
from .errors import ProblemFormatError
from .interval import IntervalMatrix, is_stable_symmetric_member
from .linalg import as_matrix
from .optimizer import QaoaConfig
from .radius import BOTH, BRUTE, METHODS, QAOA, SignPair, radius, singular_witness
from .report import Decision

HEURISTIC_CAVEAT = "heuristic upper bound on d"


@dataclass(frozen=True)
class ProblemSpec:
    A_m: np.ndarray
    Delta: np.ndarray
    epsilon: float = 0.0
    method: str = BRUTE
    qaoa: QaoaConfig = field(default_factory=QaoaConfig)

    def __post_init__(self):
        A = as_matrix(self.A_m)
        D = as_matrix(self.Delta)
        if A.shape != D.shape:
            raise ProblemFormatError(f"A_m {A.shape} and Delta {D.shape} differ in shape")
        if np.any(D < 0):
            raise ProblemFormatError("Delta must be entrywise nonnegative")
        if not self.epsilon >= 0:
            raise ProblemFormatError("epsilon must be nonnegative")
        if self.method not in METHODS:
            raise ProblemFormatError(f"unknown method {self.method!r}")
        object.__setattr__(self, "A_m", A)
        object.__setattr__(self, "Delta", D)
        object.__setattr__(self, "epsilon", float(self.epsilon))

    @classmethod
    def from_bounds(cls, lower, upper, **kwargs):
        """Interval given by its bounds; ``epsilon`` defaults to 1 so the half-width is ``Delta``."""
        AI = IntervalMatrix.from_bounds(lower, upper)
        kwargs.setdefault("epsilon", 1.0)
        return cls(AI.center, AI.radius, **kwargs)

    @property
    def n(self):
        return self.A_m.shape[0]

    @property
    def interval(self):
        return IntervalMatrix.from_center(self.A_m, self.Delta, self.epsilon)


def _compute(spec, tol):
    method = spec.method
    if method == BOTH and spec.n > brute_limit():
        method = QAOA
    return radius(spec.A_m, spec.Delta, method, spec.qaoa, tol)


def verify_nonsingular(spec, tol=DEFAULT_TOLERANCES):
    """Decide whether every matrix in the interval is non-singular.

    ``NonSingular`` needs ``d > eps`` from an exact radius. ``SingularInside``
    (``d < eps``) comes with a singular member of the interval. Everything
    else, including ``|d - eps|`` within the boundary tolerance and a QAOA
    estimate above ``eps``, is ``NotCertified``.
    """
    report = _compute(spec, tol)
    eps = spec.epsilon
    report.epsilon = eps
    exact = report.method in (BRUTE, BOTH)

    if abs(report.d - eps) <= tol.boundary:
        report.decision = Decision.NOT_CERTIFIED
        report.caveat = "d equals epsilon within tolerance"
    elif report.d > eps:
        if exact:
            report.decision = Decision.NON_SINGULAR
        else:
            report.decision = Decision.NOT_CERTIFIED
            report.caveat = HEURISTIC_CAVEAT
    else:
        report.decision = Decision.SINGULAR_INSIDE
        s = SignPair(report.z_star, report.y_star)
        report.witness = singular_witness(spec.A_m, spec.Delta, s, report.r)
    return report


def verify_stable_symmetric(spec, tol=DEFAULT_TOLERANCES):
    """Decide stability of the symmetric members of the interval.

    The symmetric sub-interval is stable when it is non-singular and one
    member is stable; the center is that member. Any failure is reported as
    ``NotCertified`` with the reason in ``caveat``.
    """
    center = spec.interval.symmetrized_center(tol)
    report = verify_nonsingular(replace(spec, A_m=center), tol)
    if report.decision == Decision.NON_SINGULAR:
        if is_stable_symmetric_member(center, tol):
            report.decision = Decision.STABLE
        else:
            report.decision = Decision.NOT_CERTIFIED
            report.caveat = "center matrix is not stable"
    elif report.decision == Decision.SINGULAR_INSIDE:
        report.decision = Decision.NOT_CERTIFIED
        report.caveat = "interval contains a singular matrix (see witness)"
    return report


def brute_report(spec: ProblemSpec, tol=DEFAULT_TOLERANCES):
    return radius(spec.A_m, spec.Delta, BRUTE, tol=tol)


def qaoa_report(spec: ProblemSpec, config: Optional[QaoaConfig] = None, tol=DEFAULT_TOLERANCES):
    return radius(spec.A_m, spec.Delta, QAOA, config or spec.qaoa, tol)
