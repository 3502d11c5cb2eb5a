import math

import numpy as np
import pytest

from qkdnoise import (
    CoincidenceMatrix,
    JointDistribution,
    KeyRateError,
    bpsc,
    computational,
    conditional_entropy,
    extract_block,
    load_builtin,
    normalize_block,
    subspace_fourier,
)

from keyrate_oracle import bpsc_oracle

# frozen 40-digit evaluation of H(AB) - H(B) for [[0.4, 0.1], [0.1, 0.4]]
H_COND_EXAMPLE = 0.7219280948873623


def _pair(comp_counts, four_counts, k):
    comp = CoincidenceMatrix(np.array(comp_counts), computational())
    four = CoincidenceMatrix(np.array(four_counts), subspace_fourier(k))
    return comp, four


def test_extract_block_values():
    record = load_builtin(8, 2)
    assert extract_block(record.comp, 2, 0).tolist() == [[10372, 42], [36, 9641]]
    record = load_builtin(8, 4)
    assert extract_block(record.four, 4, 1)[0][0] == 9213
    eye = CoincidenceMatrix(np.eye(4, dtype=int) * 7, computational())
    assert extract_block(eye, 2, 1).tolist() == [[7, 0], [0, 7]]


def test_extract_block_range_errors():
    record = load_builtin(4, 2)
    with pytest.raises(KeyRateError, match="out of range"):
        extract_block(record.comp, 2, 2)
    with pytest.raises(KeyRateError, match="does not divide"):
        extract_block(record.comp, 3, 0)


def test_joint_distribution_validation():
    JointDistribution(np.full((2, 2), 0.25))
    with pytest.raises(KeyRateError):
        JointDistribution(np.array([[0.5, 0.2], [0.2, 0.2]]))
    with pytest.raises(KeyRateError):
        JointDistribution(np.array([[1.1, -0.1], [0.0, 0.0]]))


def test_conditional_entropy_examples():
    k = 4
    perfect = JointDistribution(np.eye(k) / k)
    assert conditional_entropy(perfect) == pytest.approx(0.0, abs=1e-12)
    uniform = JointDistribution(np.full((k, k), 1 / k**2))
    assert conditional_entropy(uniform) == pytest.approx(math.log2(k), abs=1e-12)
    skewed = JointDistribution(np.array([[0.4, 0.1], [0.1, 0.4]]))
    assert conditional_entropy(skewed) == pytest.approx(H_COND_EXAMPLE, abs=1e-12)


def test_conditional_entropy_range():
    rng = np.random.default_rng(2024)
    for k in (2, 3, 4):
        for _ in range(200):
            probs = rng.dirichlet(np.ones(k * k)).reshape(k, k)
            h = conditional_entropy(JointDistribution(probs))
            assert -1e-12 <= h <= math.log2(k) + 1e-12


def test_bpsc_perfect_data():
    comp = np.kron(np.eye(2, dtype=int), np.eye(2, dtype=int)) * 5000
    result = bpsc(*_pair(comp, comp, 2), 4, 2)
    assert result.bpsc == pytest.approx(1.0, abs=1e-12)
    assert result.weights == (0.5, 0.5)


def test_bpsc_uniform_data():
    uniform = np.full((4, 4), 100)
    result = bpsc(*_pair(uniform, uniform, 2), 4, 2)
    assert result.bpsc == 0.0
    assert all(r < 0 for r in result.raw_rates)
    assert all(r == 0.0 for r in result.subspace_rates)


def test_bpsc_noiseless_d2_regression():
    record = load_builtin(2, 2)
    result = bpsc(record.comp, record.four, 2, 2)
    # pinned from the brute-force oracle over the bundled counts
    assert result.bpsc == pytest.approx(0.8049943026077226, abs=1e-9)
    assert 0.5 < result.bpsc < 1.0
    assert result.weights == (1.0,)  # d == k


def test_bpsc_matches_oracle_on_builtins():
    for d, k in ((2, 2), (4, 2), (4, 4), (8, 2), (8, 4)):
        record = load_builtin(d, k)
        expected = bpsc_oracle(
            record.comp.counts.tolist(), record.four.counts.tolist(), d, k
        )
        got = bpsc(record.comp, record.four, d, k)
        assert got.bpsc == pytest.approx(expected, abs=1e-12)
        assert got.bpsc == pytest.approx(
            sum(w * r for w, r in zip(got.weights, got.subspace_rates)), abs=1e-15
        )
        assert math.fsum(got.weights) == pytest.approx(1.0, abs=1e-12)
        assert 0.0 <= got.bpsc <= math.log2(k)


def test_bpsc_scale_invariance():
    record = load_builtin(4, 2)
    base = bpsc(record.comp, record.four, 4, 2)
    scaled = bpsc(
        CoincidenceMatrix(record.comp.counts * 17, computational()),
        CoincidenceMatrix(record.four.counts * 17, subspace_fourier(2)),
        4,
        2,
    )
    assert scaled.bpsc == pytest.approx(base.bpsc, rel=1e-12)
    assert scaled.weights == pytest.approx(base.weights, rel=1e-12)


def test_bpsc_permutation_covariance():
    record = load_builtin(4, 2)
    base = bpsc(record.comp, record.four, 4, 2)
    # swap the two labels inside subspace block 0 for both parties
    perm = np.array([1, 0, 2, 3])
    comp = record.comp.counts[np.ix_(perm, perm)]
    four = record.four.counts[np.ix_(perm, perm)]
    permuted = bpsc(*_pair(comp, four, 2), 4, 2)
    assert permuted.subspace_rates == pytest.approx(base.subspace_rates, rel=1e-12)
    assert permuted.bpsc == pytest.approx(base.bpsc, rel=1e-12)


def test_bpsc_monotone_under_uniform_noise():
    record = load_builtin(4, 4)
    previous = math.inf
    for per_cell in (0, 10, 50, 200, 1000, 5000, 20000):
        comp = record.comp.counts + per_cell
        four = record.four.counts + per_cell
        value = bpsc(*_pair(comp, four, 4), 4, 4).bpsc
        assert value <= previous + 1e-12
        previous = value


def test_bpsc_zero_comp_block_gets_zero_weight():
    comp = np.zeros((4, 4), dtype=int)
    comp[2:, 2:] = [[100, 1], [1, 100]]
    four = np.full((4, 4), 10)
    result = bpsc(*_pair(comp, four, 2), 4, 2)
    assert result.weights == (0.0, 1.0)
    assert result.subspace_rates[0] == 0.0


def test_bpsc_empty_fourier_block_is_worst_case():
    comp = np.array(
        [[100, 0, 0, 0], [0, 100, 0, 0], [0, 0, 100, 7], [0, 0, 9, 100]]
    )
    four = np.zeros((4, 4), dtype=int)
    four[:2, :2] = [[50, 0], [0, 50]]
    result = bpsc(*_pair(comp, four, 2), 4, 2)
    # block 1 has comp counts but no Fourier counts: rate clips to zero
    assert result.subspace_rates[1] == 0.0
    assert result.raw_rates[1] < 0


def test_bpsc_no_coincidences_error():
    zeros = np.zeros((4, 4), dtype=int)
    with pytest.raises(KeyRateError, match="no sifted coincidences"):
        bpsc(*_pair(zeros, zeros, 2), 4, 2)


def test_bpsc_dimension_errors():
    record = load_builtin(4, 2)
    with pytest.raises(KeyRateError):
        bpsc(record.comp, record.four, 8, 2)
    with pytest.raises(KeyRateError):
        bpsc(record.comp, record.four, 4, 3)


def test_normalize_block_empty():
    with pytest.raises(KeyRateError, match="empty block"):
        normalize_block(np.zeros((2, 2), dtype=int))
