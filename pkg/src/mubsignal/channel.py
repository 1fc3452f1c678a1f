"""Bob's non-selective measurement as a dephasing channel on qudit 1.

Two independent realizations are provided: the projector sum
``sum_m (P_m x I) rho (P_m x I)`` and the uniform average over the d
harmonic unitaries ``U_k = sum_m exp(2 pi i k m / d) P_m``, which are
diagonal in the measured basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_state
from .mub import BasisLabel, mub_basis
from .modmath import as_dim, clock_phase


def _two_qudit_state(state, d: int) -> np.ndarray:
    psi = as_state(state)
    if psi.shape[0] != d * d:
        raise ValueError(f"expected a two-qudit state of length {d * d}, got {psi.shape[0]}")
    return psi


def _rotate_qudit1(rho, u, d):
    """(u x I) rho (u x I)^dagger, returned with shape (d, d, d, d)."""
    r = rho.reshape(d, d * d * d)
    r = (u @ r).reshape(d * d, d, d)
    r = np.einsum("akl,ck->acl", r, u.conj(), optimize=True)
    return r.reshape(d, d, d, d)


@dataclass(frozen=True)
class DephasingChannel:
    """Projective measurement on qudit 1 in ``basis`` with the outcome discarded."""

    d: int
    basis: BasisLabel

    def __post_init__(self):
        object.__setattr__(self, "d", as_dim(self.d))

    def projectors(self) -> np.ndarray:
        """Array of shape (d, d, d); ``[m]`` is |m;b><m;b|."""
        kets = mub_basis(self.d, self.basis)
        return np.einsum("mi,mj->mij", kets, kets.conj())

    def apply(self, state) -> np.ndarray:
        return apply_nonselective(state, self)

    def apply_density(self, rho) -> np.ndarray:
        """Channel acting on a d^2 x d^2 density matrix (for chaining)."""
        d = self.d
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (d * d, d * d):
            raise ValueError(f"expected a {d * d}x{d * d} density matrix, got {rho.shape}")
        kets = mub_basis(d, self.basis)
        # in the measured basis the channel keeps only blocks diagonal in qudit 1
        r = _rotate_qudit1(rho, kets.conj(), d)
        r = r * np.eye(d)[:, None, :, None]
        return _rotate_qudit1(r.reshape(d * d, d * d), kets.T, d).reshape(d * d, d * d)


def apply_nonselective(state, ch: DephasingChannel) -> np.ndarray:
    """Density matrix after measuring qudit 1 of a pure state and forgetting the result."""
    d = ch.d
    psi = _two_qudit_state(state, d).reshape(d, d)
    # branch m: (P_m x I)|psi>, as rows of length d^2
    branches = np.einsum("mij,jk->mik", ch.projectors(), psi).reshape(d, d * d)
    return branches.T @ branches.conj()


def diagonal_unitary(d, basis: BasisLabel, k: int) -> np.ndarray:
    """U_k = sum_m exp(2 pi i k m / d) |m;b><m;b| on one qudit."""
    d = as_dim(d)
    kets = mub_basis(d, basis)
    weights = np.array([clock_phase(d, k * m) for m in range(d)])
    return kets.T @ (weights[:, None] * kets.conj())


def harmonic_unitaries(d, basis: BasisLabel) -> list[np.ndarray]:
    d = as_dim(d)
    return [diagonal_unitary(d, basis, k) for k in range(d)]


def channel_from_unitary_average(state, d, basis: BasisLabel) -> np.ndarray:
    """(1/d) sum_k (U_k x I)|psi><psi|(U_k x I)^dagger."""
    d = as_dim(d)
    psi = _two_qudit_state(state, d).reshape(d, d)
    rho = np.zeros((d * d, d * d), dtype=complex)
    for u in harmonic_unitaries(d, basis):
        v = (u @ psi).reshape(d * d)
        rho += np.outer(v, v.conj())
    return rho / d


def dephasing_error(rho, ch: DephasingChannel) -> float:
    """Largest coherence left between different outcomes of the measured basis.

    Zero exactly when ``rho`` commutes with every ``P_m x I``.
    """
    d = ch.d
    r = _rotate_qudit1(np.asarray(rho, dtype=complex), mub_basis(d, ch.basis).conj(), d)
    off = r * (1 - np.eye(d))[:, None, :, None]
    return float(np.max(np.abs(off)))


def trace_error(rho) -> float:
    return float(abs(np.trace(rho) - 1.0))

