import itertools

import numpy as np
import pytest
from scipy.linalg import expm

from iqmv.linalg import invert
from iqmv.radius import Rank1Delta, cost_bilinear, decompose_rank1, signs_from_bits
from iqmv.simulator import (CountsHistogram, DiagonalHamiltonian, apply_diagonal, apply_mixing_unitary,
                            apply_problem_unitary, basis_state, build_problem_hamiltonian,
                            diagonal_value, expectation, probabilities, run_circuit, sample,
                            uniform_state)

import dense_oracle
from conftest import EX1_A, random_instance


@pytest.fixture
def H1():
    return build_problem_hamiltonian(invert(EX1_A), Rank1Delta(np.ones(2), np.ones(2)))


def all_bits(m):
    return ["".join(b) for b in itertools.product("01", repeat=m)]


def random_state(rng, m):
    psi = rng.normal(size=2 ** m) + 1j * rng.normal(size=2 ** m)
    return psi / np.linalg.norm(psi)


def test_example1_coefficients(H1):
    np.testing.assert_array_equal(H1.coefficients, [[1, 1], [0, 1]])
    assert H1.terms == [(0, 0, 1.0), (0, 1, 1.0), (1, 1, 1.0)]


@pytest.mark.parametrize("bits, value", [("0000", 3.0), ("1111", 3.0), ("0101", 1.0)])
def test_example1_values(H1, bits, value):
    assert diagonal_value(H1, bits) == value
    assert H1.diagonal[int(bits, 2)] == value


def test_diagonal_matches_cost(rng):
    for n in (1, 2, 3):
        A, D = random_instance(rng, n)
        r1, Ainv = decompose_rank1(D), invert(A)
        H = build_problem_hamiltonian(Ainv, r1)
        for k, bits in enumerate(all_bits(2 * n)):
            c = cost_bilinear(Ainv, r1, signs_from_bits(bits))
            assert diagonal_value(H, bits) == c
            assert H.diagonal[k] == c


def test_diagonal_matches_dense_operator(rng):
    # H_P |x> = C(x) |x> for every basis state
    for n in (1, 2, 3):
        A, D = random_instance(rng, n)
        H = build_problem_hamiltonian(invert(A), decompose_rank1(D))
        HP = dense_oracle.problem_hamiltonian(H.coefficients)
        for bits in all_bits(2 * n):
            x = basis_state(bits)
            np.testing.assert_allclose(HP @ x, diagonal_value(H, bits) * x, atol=1e-12)
            np.testing.assert_allclose(apply_diagonal(x, H), diagonal_value(H, bits) * x, atol=0)


def test_uniform_state():
    np.testing.assert_allclose(uniform_state(1), [2 ** -0.5] * 2)
    np.testing.assert_array_equal(uniform_state(2), [0.5] * 4)
    assert np.linalg.norm(uniform_state(12)) == pytest.approx(1, abs=1e-12)
    with pytest.raises(ValueError):
        uniform_state(0)


def test_uniform_is_hadamard_product():
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    zero = np.array([1.0, 0.0])
    np.testing.assert_allclose(uniform_state(2), np.kron(h @ zero, h @ zero), atol=1e-15)


def test_problem_unitary(H1, rng):
    psi = random_state(rng, 4)
    np.testing.assert_array_equal(apply_problem_unitary(psi, H1, 0.0), psi)
    out = apply_problem_unitary(basis_state("0000"), H1, np.pi / 3)
    assert out[0] == pytest.approx(-1, abs=1e-15)
    np.testing.assert_allclose(np.abs(apply_problem_unitary(psi, H1, 0.7)) ** 2, np.abs(psi) ** 2, atol=1e-15)


def test_mixing_unitary_basic(rng):
    psi = random_state(rng, 3)
    np.testing.assert_array_equal(apply_mixing_unitary(psi, 0.0), psi)
    np.testing.assert_allclose(apply_mixing_unitary(basis_state("0"), np.pi / 2), [0, -1j], atol=1e-15)
    assert np.linalg.norm(apply_mixing_unitary(psi, 1.234)) == pytest.approx(1, abs=1e-10)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_mixing_matches_dense_exponential(rng, m):
    HB = dense_oracle.mixing_hamiltonian(m)
    for beta in rng.uniform(-np.pi, np.pi, 5):
        psi = random_state(rng, m)
        np.testing.assert_allclose(apply_mixing_unitary(psi, beta), expm(-1j * beta * HB) @ psi, atol=1e-9)


def test_run_circuit_trivial(H1):
    np.testing.assert_array_equal(run_circuit(H1, [], []), uniform_state(4))
    np.testing.assert_allclose(run_circuit(H1, [0, 0], [0, 0]), uniform_state(4), atol=1e-15)
    with pytest.raises(ValueError):
        run_circuit(H1, [0.1], [0.1, 0.2])


def test_run_circuit_matches_dense(rng):
    for n in (1, 2):
        A, D = random_instance(rng, n)
        H = build_problem_hamiltonian(invert(A), decompose_rank1(D))
        beta, gamma = rng.uniform(0, np.pi, (2, 3))
        np.testing.assert_allclose(run_circuit(H, beta, gamma),
                                   dense_oracle.circuit_state(H.coefficients, beta, gamma), atol=1e-10)


def test_norm_preserved(rng):
    A, D = random_instance(rng, 2)
    H = build_problem_hamiltonian(invert(A), decompose_rank1(D))
    for _ in range(100):
        p = rng.integers(0, 5)
        psi = run_circuit(H, rng.uniform(-4, 4, p), rng.uniform(-4, 4, p))
        assert abs(np.linalg.norm(psi) - 1) <= 1e-10


def test_expectation_examples(H1, rng):
    assert expectation(basis_state("0000"), H1) == 3.0
    assert expectation(uniform_state(4), H1) == pytest.approx(0, abs=1e-15)
    for _ in range(20):
        e = expectation(random_state(rng, 4), H1)
        assert H1.diagonal.min() - 1e-12 <= e <= H1.diagonal.max() + 1e-12


def test_expectation_uniform_is_mean(rng):
    for n in (1, 2, 3):
        A, D = random_instance(rng, n)
        H = build_problem_hamiltonian(invert(A), decompose_rank1(D))
        mean = np.mean([diagonal_value(H, b) for b in all_bits(2 * n)])
        assert expectation(uniform_state(2 * n), H) == pytest.approx(mean, abs=1e-12)


def test_expectation_invariant_under_problem_unitary(H1, rng):
    psi = random_state(rng, 4)
    for gamma in rng.uniform(-5, 5, 10):
        assert expectation(apply_problem_unitary(psi, H1, gamma), H1) == pytest.approx(
            expectation(psi, H1), abs=1e-12)


def test_sample_deterministic_state():
    hist = sample(basis_state("0000"), 100, seed=1)
    assert hist.counts == {"0000": 100}
    assert hist.shots == 100


def test_sample_uniform():
    hist = sample(uniform_state(2), 4096, seed=11)
    assert sum(hist.counts.values()) == 4096
    sigma = np.sqrt(4096 * 0.25 * 0.75)
    for bits in all_bits(2):
        assert abs(hist.counts[bits] - 1024) <= 5 * sigma


def test_sample_reproducible(rng):
    psi = random_state(rng, 5)
    assert sample(psi, 500, seed=3).counts == sample(psi, 500, seed=3).counts
    with pytest.raises(ValueError):
        sample(psi, 0)


def test_sample_counts_sum(rng):
    for shots in (1, 7, 100, 1000):
        assert sum(sample(random_state(rng, 3), shots, seed=shots).counts.values()) == shots


def test_probabilities_normalized(rng):
    assert probabilities(random_state(rng, 4)).sum() == pytest.approx(1, abs=1e-15)


def test_histogram_ordering():
    hist = CountsHistogram(10, {"01": 3, "00": 3, "11": 4})
    assert hist.most_common() == [("11", 4), ("00", 3), ("01", 3)]
    assert hist.to_csv() == "bitstring,count\n11,4\n00,3\n01,3\n"


def test_zero_hamiltonian_diagonal():
    H = DiagonalHamiltonian(np.zeros((2, 2)))
    assert H.terms == []
    np.testing.assert_array_equal(H.diagonal, 0)
