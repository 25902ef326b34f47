"""Numerical tolerances and size limits, collected in one place."""
import os
from dataclasses import dataclass

BRUTE_LIMIT_ENV = "IQMV_BRUTE_LIMIT"


@dataclass(frozen=True)
class Tolerances:
    pivot: float = 1e-12         # relative to max |M_ij|
    jacobi: float = 1e-10        # off-diagonal stop, relative to ||M||_F
    symmetry: float = 1e-9       # relative to max |M_ij|
    stability: float = 1e-9      # eigenvalues must be < -stability
    rank1: float = 1e-9          # relative Frobenius residual
    membership: float = 1e-12     # absolute slack on |M - center| <= radius
    boundary: float = 1e-12      # |d - eps| at or below this is undecided
    convergence: float = 1e-8    # optimizer stop on |change in objective|


DEFAULT_TOLERANCES = Tolerances()

DEFAULT_BRUTE_LIMIT = 14
DEFAULT_QUBIT_LIMIT = 24


def brute_limit():
    """Brute-force dimension cap, overridable through ``IQMV_BRUTE_LIMIT``."""
    raw = os.environ.get(BRUTE_LIMIT_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BRUTE_LIMIT
    return int(raw)
