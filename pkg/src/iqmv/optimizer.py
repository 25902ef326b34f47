"""
Classical outer loop of QAOA: objective, finite-difference gradient,
gradient ascent with random restarts, and extraction of a candidate
solution from measurement samples.
"""
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import NonPositiveCost
from .linalg import invert
from .radius import QAOA, check_delta, signs_from_bits
from .report import RadiusReport
from .simulator import build_problem_hamiltonian, diagonal_value, expectation, run_circuit, sample


@dataclass(frozen=True)
class QaoaParams:
    beta: np.ndarray
    gamma: np.ndarray

    def __post_init__(self):
        beta = np.atleast_1d(np.asarray(self.beta, dtype=float))
        gamma = np.atleast_1d(np.asarray(self.gamma, dtype=float))
        if beta.shape != gamma.shape or beta.ndim != 1:
            raise ValueError("beta and gamma must be vectors of equal length")
        if not (np.all(np.isfinite(beta)) and np.all(np.isfinite(gamma))):
            raise ValueError("parameters must be finite")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    @property
    def p(self):
        return self.beta.shape[0]

    def vector(self):
        return np.concatenate([self.beta, self.gamma])

    @classmethod
    def from_vector(cls, theta):
        theta = np.asarray(theta, dtype=float)
        p = theta.shape[0] // 2
        return cls(theta[:p], theta[p:])


@dataclass(frozen=True)
class QaoaConfig:
    p: int = 2
    restarts: int = 10
    max_iterations: int = 200
    step_size: float = 0.05
    fd_step: float = 1e-4
    shots: int = 100
    seed: int = 0
    init_range: float = np.pi

    def __post_init__(self):
        for name in ("p", "restarts", "max_iterations", "shots"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"{name} must be a positive integer")
        for name in ("step_size", "fd_step", "init_range"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class SolutionCandidate:
    bit_string: str
    classical_cost: float
    count: int


def objective(H, params):
    """Exact ``<psi(beta, gamma)| H_P |psi(beta, gamma)>``; to be maximized."""
    return expectation(run_circuit(H, params.beta, params.gamma), H)


def _objective_at(H, theta):
    p = theta.shape[0] // 2
    return expectation(run_circuit(H, theta[:p], theta[p:]), H)


def _gradient_at(H, theta, h):
    grad = np.empty_like(theta)
    for k in range(theta.shape[0]):
        e = np.zeros_like(theta)
        e[k] = h
        grad[k] = (_objective_at(H, theta + e) - _objective_at(H, theta - e)) / (2 * h)
    return grad


def gradient(H, params, fd_step):
    """Central differences over ``(beta_1..beta_p, gamma_1..gamma_p)``."""
    if not fd_step > 0:
        raise ValueError("fd_step must be positive")
    return _gradient_at(H, params.vector(), fd_step)


def _ascend(H, theta, config, stop):
    f = _objective_at(H, theta)
    values = []
    for _ in range(config.max_iterations):
        theta = theta + config.step_size * _gradient_at(H, theta, config.fd_step)
        f_new = _objective_at(H, theta)
        values.append(f_new)
        if abs(f_new - f) < stop:
            break
        f = f_new
    return theta, f_new, values


def optimize(H, config=QaoaConfig(), tol=DEFAULT_TOLERANCES):
    """Gradient ascent from ``config.restarts`` random starts.

    Restart ``k`` draws its start uniformly from ``[0, init_range)`` with
    seed ``config.seed + k``. Returns the final parameters of the restart
    with the highest final objective (lowest index on ties) and the
    best-so-far objective trace over all iterations.
    """
    best_theta, best_f = None, -np.inf
    trace = []
    running = -np.inf
    for k in range(config.restarts):
        rng = np.random.default_rng(config.seed + k)
        theta0 = rng.uniform(0.0, config.init_range, size=2 * config.p)
        theta, f, values = _ascend(H, theta0, config, tol.convergence)
        for val in values:
            running = max(running, val)
            trace.append(running)
        if f > best_f:
            best_theta, best_f = theta, f
    return QaoaParams.from_vector(best_theta), trace


def extract_solution(H, params, shots, seed=None):
    """Sample the final state and keep the sampled string of highest cost.

    Ties go to the higher count, then to the lexicographically smaller string.
    """
    hist = sample(run_circuit(H, params.beta, params.gamma), shots, seed)
    scored = [(diagonal_value(H, b), c, b) for b, c in hist.counts.items()]
    cost, count, bits = min(scored, key=lambda t: (-t[0], -t[1], t[2]))
    return SolutionCandidate(bits, cost, count), hist


def qaoa_radius(A, Delta, config=None, tol=DEFAULT_TOLERANCES):
    """Radius estimate from a QAOA run; ``r`` is the cost of a sampled string."""
    config = QaoaConfig() if config is None else config
    r1 = check_delta(Delta, tol)
    Ainv = invert(A, tol)
    H = build_problem_hamiltonian(Ainv, r1)
    params, trace = optimize(H, config, tol)
    best, hist = extract_solution(H, params, config.shots, config.seed)
    if best.classical_cost <= 0:
        raise NonPositiveCost(f"best sampled cost {best.classical_cost} is not positive")
    s = signs_from_bits(best.bit_string)
    return RadiusReport(
        r=best.classical_cost, d=1.0 / best.classical_cost, best_bit_string=best.bit_string,
        z_star=s.z, y_star=s.y, method=QAOA, histogram=hist.counts, shots=hist.shots,
        beta=params.beta, gamma=params.gamma,
        extra={"best_objective": trace[-1] if trace else None, "iterations": len(trace)})
