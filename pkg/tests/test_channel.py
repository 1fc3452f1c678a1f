import numpy as np
import pytest

from mubsignal.channel import (
    DephasingChannel,
    apply_nonselective,
    channel_from_unitary_average,
    dephasing_error,
    diagonal_unitary,
)
from mubsignal.entangle import Preparation, all_preparations, entangled_state
from mubsignal.linalg import frobenius_distance, is_unitary, purity, tensor
from mubsignal.mub import COMPUTATIONAL, Fourier, all_labels, mub_ket
from oracles import kraus_dephase, random_state


def _b(label):
    return None if label == COMPUTATIONAL else label.b


def test_bell_state_computational_dephasing():
    phi = entangled_state(2, Preparation(0, 0, 0))
    rho = apply_nonselective(phi, DephasingChannel(2, COMPUTATIONAL))
    assert np.max(np.abs(rho - np.diag([0.5, 0, 0, 0.5]))) <= 1e-15
    assert purity(rho) == pytest.approx(0.5, abs=1e-15)
    avg = channel_from_unitary_average(phi, 2, COMPUTATIONAL)
    assert frobenius_distance(avg, rho) <= 1e-12


@pytest.mark.parametrize("d", [2, 3])
def test_matches_explicit_kraus_sum(d):
    for label in all_labels(d):
        for p in all_preparations(d):
            psi = entangled_state(d, p)
            rho = apply_nonselective(psi, DephasingChannel(d, label))
            assert frobenius_distance(rho, kraus_dephase(psi, d, _b(label))) <= 1e-13


def test_eigenstate_is_unchanged():
    for d in (2, 3, 5):
        for label in all_labels(d):
            psi = tensor(mub_ket(d, label, 1), mub_ket(d, COMPUTATIONAL, 0))
            pure = np.outer(psi, psi.conj())
            assert frobenius_distance(apply_nonselective(psi, DephasingChannel(d, label)), pure) <= 1e-13
            assert frobenius_distance(channel_from_unitary_average(psi, d, label), pure) <= 1e-13


@pytest.mark.parametrize("d", [2, 3, 5])
def test_trace_preserving_and_idempotent(d):
    rng = np.random.default_rng(d)
    for label in all_labels(d):
        ch = DephasingChannel(d, label)
        for _ in range(200):
            rho = ch.apply(random_state(rng, d * d))
            assert abs(np.trace(rho) - 1) <= 1e-12
        assert frobenius_distance(ch.apply_density(rho), rho) <= 1e-13
        assert dephasing_error(rho, ch) <= 1e-12


@pytest.mark.parametrize("d", [2, 3, 5])
def test_mixed_input_matches_kraus_sum(d):
    rng = np.random.default_rng(100 + d)
    for label in all_labels(d):
        ch = DephasingChannel(d, label)
        psis = [random_state(rng, d * d) for _ in range(3)]
        weights = rng.dirichlet(np.ones(3))
        rho = sum(w * np.outer(p, p.conj()) for w, p in zip(weights, psis))
        expected = sum(w * kraus_dephase(p, d, _b(label)) for w, p in zip(weights, psis))
        assert frobenius_distance(ch.apply_density(rho), expected) <= 1e-13
        assert dephasing_error(rho, ch) > 1e-3
        assert dephasing_error(expected, ch) <= 1e-13


def test_diagonal_unitary_examples():
    assert np.allclose(diagonal_unitary(3, Fourier(1), 0), np.eye(3), atol=1e-15)
    w = np.exp(2j * np.pi / 3)
    assert np.max(np.abs(diagonal_unitary(3, COMPUTATIONAL, 1) - np.diag([1, w, w * w]))) <= 1e-15
    for k in range(3):
        for j in range(3):
            prod = diagonal_unitary(3, Fourier(1), k) @ diagonal_unitary(3, Fourier(1), j)
            assert np.max(np.abs(prod - diagonal_unitary(3, Fourier(1), (k + j) % 3))) <= 1e-12


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_diagonal_unitaries_are_unitary_and_diagonal_in_basis(d):
    for label in all_labels(d):
        for k in range(d):
            u = diagonal_unitary(d, label, k)
            assert is_unitary(u)
            for m in range(d):
                ket = mub_ket(d, label, m)
                assert np.linalg.norm(u @ ket - np.exp(2j * np.pi * k * m / d) * ket) <= 1e-12


def test_dual_realization_d3_fourier2():
    psi = entangled_state(3, Preparation(1, 2, 0))
    a = apply_nonselective(psi, DephasingChannel(3, Fourier(2)))
    b = channel_from_unitary_average(psi, 3, Fourier(2))
    assert frobenius_distance(a, b) <= 1e-12


@pytest.mark.parametrize("d", [2, 3, 5])
def test_purity_of_dephased_entangled_input(d):
    for label in all_labels(d):
        rho = apply_nonselective(entangled_state(d, Preparation(1 % d, 0, 1 % d)), DephasingChannel(d, label))
        assert abs(purity(rho) - 1 / d) <= 1e-12


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        apply_nonselective(np.ones(5), DephasingChannel(2, COMPUTATIONAL))
    with pytest.raises(ValueError):
        channel_from_unitary_average(np.ones(3), 2, COMPUTATIONAL)
    with pytest.raises(ValueError):
        DephasingChannel(2, COMPUTATIONAL).apply_density(np.eye(3))
    with pytest.raises(ValueError):
        DephasingChannel(4, COMPUTATIONAL)
