"""
Radius of non-singularity for a rank-one perturbation pattern.

For ``Delta = delta v^T`` the radius is ``d = 1/r`` with

    r = max over sign vectors z, y of  sum_ij v_i z_i ainv_ij y_j delta_j

where ``ainv = A^{-1}``. Sign vectors map to a 2n-bit string through
``z_i = (-1)**x_i`` and ``y_i = (-1)**x_{n+i}``; bit 0 of the string is the
leftmost character.
"""
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES, brute_limit
from .errors import DimensionTooLarge, NegativeEntries, RankTooHigh, ZeroMatrix
from .linalg import as_matrix, invert
from .report import RadiusReport

BRUTE, QAOA, BOTH = "brute", "qaoa", "both"
METHODS = (BRUTE, QAOA, BOTH)


@dataclass(frozen=True)
class Rank1Delta:
    delta: np.ndarray
    v: np.ndarray
    residual: float = 0.0

    @property
    def n(self):
        return self.delta.shape[0]

    def matrix(self):
        return np.outer(self.delta, self.v)


@dataclass(frozen=True)
class SignPair:
    z: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        z = np.asarray(self.z, dtype=int)
        y = np.asarray(self.y, dtype=int)
        if z.shape != y.shape or z.ndim != 1:
            raise ValueError("z and y must be vectors of equal length")
        if not (np.all(np.abs(z) == 1) and np.all(np.abs(y) == 1)):
            raise ValueError("sign vectors must have entries in {-1, +1}")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "y", y)

    def __eq__(self, other):
        return (isinstance(other, SignPair) and np.array_equal(self.z, other.z)
                and np.array_equal(self.y, other.y))

    def __hash__(self):
        return hash((tuple(self.z), tuple(self.y)))

    def flipped(self):
        return SignPair(-self.z, -self.y)


def decompose_rank1(Delta, tol=DEFAULT_TOLERANCES.rank1):
    """Factor ``Delta = delta v^T`` through its largest-magnitude entry.

    ``delta`` is the pivot column and ``v`` the pivot row scaled by the
    pivot, so exactly rank-one input is reproduced without rounding in the
    pivot row and column.
    """
    D = as_matrix(Delta)
    fro = float(np.linalg.norm(D))
    if fro == 0.0:
        raise ZeroMatrix("perturbation matrix is zero")
    i, j = np.unravel_index(int(np.argmax(np.abs(D))), D.shape)
    delta = D[:, j].copy()
    v = D[i, :] / D[i, j]
    residual = float(np.linalg.norm(D - np.outer(delta, v)))
    if residual > tol * fro:
        raise RankTooHigh(f"rank-one residual {residual:.3e} exceeds {tol:g} * ||Delta||_F")
    return Rank1Delta(delta, v, residual)


def parse_bits(x):
    """Normalize a bit string given as text or a 0/1 sequence to text."""
    if isinstance(x, str):
        s = x.strip()
    else:
        s = "".join(str(int(b)) for b in x)
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a bit string: {x!r}")
    return s


def signs_from_bits(x):
    s = parse_bits(x)
    if len(s) % 2:
        raise ValueError(f"bit string {s!r} has odd length")
    n = len(s) // 2
    signs = np.array([1 - 2 * int(c) for c in s])
    return SignPair(signs[:n], signs[n:])


def bits_from_signs(s):
    return "".join("0" if v > 0 else "1" for v in np.concatenate([s.z, s.y]))


def complement(x):
    return "".join("1" if c == "0" else "0" for c in parse_bits(x))


def sign_table(n):
    """Row ``k`` holds ``(-1)**bit`` for the n bits of ``k``, most significant first."""
    k = np.arange(2 ** n)[:, None]
    shifts = np.arange(n - 1, -1, -1)[None, :]
    return 1 - 2 * ((k >> shifts) & 1)


def coefficient_matrix(Ainv, r1):
    """``c_ij = v_i * ainv_ij * delta_j``."""
    Ainv = np.asarray(Ainv, dtype=float)
    if Ainv.shape != (r1.n, r1.n):
        raise ValueError(f"inverse shape {Ainv.shape} does not match factor length {r1.n}")
    return (r1.v[:, None] * Ainv) * r1.delta[None, :]


def signed_sum(C, z, y):
    # Fixed row-major accumulation; the full-diagonal builder uses the same
    # order, so both agree bit for bit.
    n = C.shape[0]
    total = 0.0
    for i in range(n):
        for j in range(n):
            total += C[i, j] * z[i] * y[j]
    return float(total)


def cost_bilinear(Ainv, r1, s):
    """``v^T T_z A^{-1} T_y delta`` for sign pair ``s``; valid for any rank-one factor."""
    return signed_sum(coefficient_matrix(Ainv, r1), s.z, s.y)


def brute_force_r(Ainv, r1, limit=None):
    """Exact maximum of the bilinear cost over all sign pairs.

    Only ``z`` with a leading +1 is enumerated (the cost is invariant under
    flipping both vectors), and for each such ``z`` the best ``y`` follows
    coordinatewise from the sign of ``(z^T C)_j``. Among maximizers the
    lexicographically smallest bit string is returned.

    Returns ``(r, SignPair)``.
    """
    n = r1.n
    limit = brute_limit() if limit is None else limit
    if n > limit:
        raise DimensionTooLarge(f"n = {n} exceeds the brute-force limit {limit}")
    C = coefficient_matrix(Ainv, r1)
    Z = sign_table(n - 1)
    Z = np.hstack([np.ones((Z.shape[0], 1), dtype=int), Z]) if n > 1 else np.ones((1, 1), dtype=int)
    W = Z @ C
    values = np.abs(W).sum(axis=1)
    best = values.max()
    slack = 1e-12 * max(1.0, abs(best))
    k = int(np.flatnonzero(values >= best - slack)[0])
    z = Z[k]
    y = np.where(W[k] >= 0, 1, -1)
    s = SignPair(z, y)
    return signed_sum(C, s.z, s.y), s


def exhaustive_r(Ainv, r1):
    """Plain enumeration of every bit string; an oracle for small n only."""
    n = r1.n
    C = coefficient_matrix(Ainv, r1)
    best, arg = -np.inf, None
    for k in range(4 ** n):
        s = signs_from_bits(format(k, f"0{2 * n}b"))
        val = signed_sum(C, s.z, s.y)
        if val > best:
            best, arg = val, s
    return best, arg


def singular_witness(A, Delta, s, r):
    """``A - (1/r) T_y Delta T_z``, singular when ``r`` is the cost at ``s``."""
    A = as_matrix(A)
    D = as_matrix(Delta)
    if r <= 0:
        raise ValueError("r must be positive")
    return A - (1.0 / r) * (s.y[:, None] * D * s.z[None, :])


def check_delta(Delta, tol=DEFAULT_TOLERANCES):
    D = as_matrix(Delta)
    if np.any(D < 0):
        raise NegativeEntries("perturbation matrix must be entrywise nonnegative")
    return decompose_rank1(D, tol.rank1)


def radius(A, Delta, method=BRUTE, config=None, tol=DEFAULT_TOLERANCES):
    """Radius of non-singularity ``d(A, Delta) = 1/r``.

    ``method`` is ``"brute"``, ``"qaoa"`` or ``"both"``; with ``"both"`` the
    reported ``r`` is the exact one and the QAOA run is attached.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method != BRUTE:
        from .optimizer import qaoa_radius
        report = qaoa_radius(A, Delta, config, tol=tol)
        if method == QAOA:
            return report
        exact = radius(A, Delta, BRUTE, tol=tol)
        exact.method = BOTH
        exact.qaoa_r = report.r
        exact.histogram, exact.shots = report.histogram, report.shots
        exact.beta, exact.gamma = report.beta, report.gamma
        exact.extra["qaoa_bit_string"] = report.best_bit_string
        return exact

    r1 = check_delta(Delta, tol)
    Ainv = invert(A, tol)
    r, s = brute_force_r(Ainv, r1)
    return RadiusReport(r=r, d=1.0 / r, best_bit_string=bits_from_signs(s),
                        z_star=s.z, y_star=s.y, method=BRUTE)
