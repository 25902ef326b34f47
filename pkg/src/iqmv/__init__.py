"""Radius of non-singularity and robust stability of interval matrices,
by exact enumeration and by QAOA on a statevector simulator."""
from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (BoundsInverted, DimensionTooLarge, IqmvError, NegativeEntries, NonPositiveCost,
                     NotSymmetric, ProblemFormatError, RankTooHigh, SingularMatrix, ZeroMatrix)
from .interval import IntervalMatrix, is_stable_symmetric_member
from .linalg import determinant, invert, solve, symmetric_eigenvalues
from .optimizer import QaoaConfig, QaoaParams, SolutionCandidate, extract_solution, optimize, qaoa_radius
from .radius import (Rank1Delta, SignPair, brute_force_r, cost_bilinear, decompose_rank1, radius,
                     signs_from_bits, singular_witness)
from .report import Decision, RadiusReport
from .simulator import DiagonalHamiltonian, build_problem_hamiltonian, diagonal_value, run_circuit, sample
from .verifier import ProblemSpec, verify_nonsingular, verify_stable_symmetric

__version__ = "0.1.0"
