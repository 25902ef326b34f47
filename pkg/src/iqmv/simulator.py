"""
Statevector simulation of the QAOA circuit for the radius problem.

States are plain complex numpy vectors of length ``2**m``. Amplitude index
``k`` corresponds to the bit string of ``k`` with qubit 1 as the most
significant bit, so ``format(k, f"0{m}b")`` prints qubit 1 first. For an
n x n problem the circuit has ``m = 2n`` qubits: the first n carry ``z``,
the last n carry ``y``.
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config import DEFAULT_QUBIT_LIMIT
from .radius import coefficient_matrix, parse_bits, sign_table, signs_from_bits, signed_sum


@dataclass(frozen=True)
class DiagonalHamiltonian:
    """``H_P = sum_ij c_ij Z_i Z_{n+j}``, stored as the n x n table ``c``."""

    coefficients: np.ndarray

    @property
    def n(self):
        return self.coefficients.shape[0]

    @property
    def num_qubits(self):
        return 2 * self.n

    @property
    def terms(self):
        """Nonzero ``(i, j, c_ij)`` with zero-based indices."""
        C = self.coefficients
        return [(i, j, float(C[i, j])) for i in range(self.n) for j in range(self.n) if C[i, j] != 0.0]

    @cached_property
    def diagonal(self):
        """Value of ``H_P`` on every basis state, indexed like the amplitudes."""
        n, C = self.n, self.coefficients
        S = sign_table(n).astype(float)
        table = np.zeros((2 ** n, 2 ** n))
        for i in range(n):
            for j in range(n):
                table += C[i, j] * np.outer(S[:, i], S[:, j])
        table.setflags(write=False)
        return table.reshape(-1)

    def value(self, x):
        return diagonal_value(self, x)


def build_problem_hamiltonian(Ainv, r1):
    return DiagonalHamiltonian(coefficient_matrix(Ainv, r1))


def diagonal_value(H, x):
    s = signs_from_bits(x)
    if s.z.shape[0] != H.n:
        raise ValueError(f"bit string has length {2 * s.z.shape[0]}, expected {H.num_qubits}")
    return signed_sum(H.coefficients, s.z, s.y)


def basis_label(k, m):
    return format(k, f"0{m}b")


def basis_state(x):
    x = parse_bits(x)
    psi = np.zeros(2 ** len(x), dtype=complex)
    psi[int(x, 2)] = 1.0
    return psi


def num_qubits(psi):
    m = int(np.log2(len(psi)))
    if 2 ** m != len(psi):
        raise ValueError(f"state length {len(psi)} is not a power of two")
    return m


def uniform_state(m, limit=DEFAULT_QUBIT_LIMIT):
    if not 1 <= m <= limit:
        raise ValueError(f"qubit count {m} outside [1, {limit}]")
    return np.full(2 ** m, 2.0 ** (-m / 2), dtype=complex)


def apply_diagonal(psi, H):
    """``H_P |psi>`` (not unitary; used to check the operator action)."""
    return H.diagonal * psi


def apply_problem_unitary(psi, H, gamma):
    return np.exp(-1j * gamma * H.diagonal) * psi


def apply_mixing_unitary(psi, beta):
    """``exp(-i beta sum_j X_j)`` as the product of per-qubit ``cos(b) I - i sin(b) X``."""
    m = num_qubits(psi)
    c, s = np.cos(beta), -1j * np.sin(beta)
    out = np.asarray(psi, dtype=complex)
    for q in range(m):
        view = out.reshape(2 ** q, 2, 2 ** (m - q - 1))
        out = (c * view + s * view[:, ::-1, :]).reshape(-1)
    return out


def run_circuit(H, beta, gamma):
    """Problem then mixing unitary for each layer, starting from the uniform state."""
    beta = np.atleast_1d(np.asarray(beta, dtype=float))
    gamma = np.atleast_1d(np.asarray(gamma, dtype=float))
    if beta.shape != gamma.shape:
        raise ValueError("beta and gamma must have the same length")
    psi = uniform_state(H.num_qubits)
    for b, g in zip(beta, gamma):
        psi = apply_mixing_unitary(apply_problem_unitary(psi, H, g), b)
    return psi


def probabilities(psi):
    p = np.abs(psi) ** 2
    return p / p.sum()


def expectation(psi, H):
    if len(psi) != len(H.diagonal):
        raise ValueError("state and Hamiltonian act on different qubit counts")
    return float(np.dot(np.abs(psi) ** 2, H.diagonal))


@dataclass
class CountsHistogram:
    shots: int
    counts: dict

    def most_common(self, k=None):
        """Strings by descending count, ties in lexicographic order."""
        items = sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))
        return items if k is None else items[:k]

    def to_csv(self):
        lines = ["bitstring,count"]
        lines += [f"{b},{c}" for b, c in self.most_common()]
        return "\n".join(lines) + "\n"


def sample(psi, shots, seed=None):
    """Draw ``shots`` measurements in the computational basis."""
    if shots < 1:
        raise ValueError("shots must be at least 1")
    m = num_qubits(psi)
    rng = np.random.default_rng(seed)
    draws = rng.multinomial(shots, probabilities(psi))
    nz = np.flatnonzero(draws)
    return CountsHistogram(int(shots), {basis_label(int(k), m): int(draws[k]) for k in nz})
