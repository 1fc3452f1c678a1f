"""Dense complex linear algebra for one and two qudits.

States are plain 1-D complex numpy arrays, operators 2-D arrays. Two-qudit
vectors use the index ``n1 * d + n2``: qudit 1 (Bob's) is the slow index.
"""

from __future__ import annotations

import numpy as np

from .config import DEFAULT_TOLERANCES


def as_state(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"state vector must be 1-D, got shape {v.shape}")
    return v


def inner(u, v) -> complex:
    """<u|v>, conjugate-linear in the first argument."""
    return complex(np.vdot(u, v))


def norm(v) -> float:
    return float(np.linalg.norm(v))


def is_normalized(v, atol: float = DEFAULT_TOLERANCES.structural) -> bool:
    return abs(norm(v) - 1.0) <= atol


def tensor(u, v) -> np.ndarray:
    """Kronecker product; the first factor is the slow index."""
    return np.kron(as_state(u), as_state(v))


def basis_ket(dim: int, n: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[n % dim] = 1.0
    return v


def projector(v) -> np.ndarray:
    v = as_state(v)
    return np.outer(v, v.conj())


def _check_square(rho, dim: int | None = None) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    if dim is not None and rho.shape[0] != dim:
        raise ValueError(f"expected a {dim}x{dim} matrix, got {rho.shape[0]}x{rho.shape[1]}")
    return rho


def partial_trace_keep1(rho, d: int) -> np.ndarray:
    """Trace out qudit 2 of a d^2 x d^2 operator, keeping qudit 1."""
    d = int(d)
    rho = _check_square(rho, d * d)
    return np.einsum("ikjk->ij", rho.reshape(d, d, d, d))


def partial_trace_keep2(rho, d: int) -> np.ndarray:
    """Trace out qudit 1 of a d^2 x d^2 operator, keeping qudit 2."""
    d = int(d)
    rho = _check_square(rho, d * d)
    return np.einsum("kikj->ij", rho.reshape(d, d, d, d))


def reduced_states(psi, d: int) -> tuple[np.ndarray, np.ndarray]:
    """Both one-qudit marginals of a pure two-qudit state."""
    d = int(d)
    psi = as_state(psi)
    if psi.shape[0] != d * d:
        raise ValueError(f"expected a vector of length {d * d}, got {psi.shape[0]}")
    m = psi.reshape(d, d)
    return m @ m.conj().T, m.T @ m.conj()


def frobenius_distance(a, b) -> float:
    a = _check_square(a)
    b = _check_square(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b, "fro"))


def purity(rho) -> float:
    rho = _check_square(rho)
    return float(np.real(np.vdot(rho.conj().T, rho)))


def hermiticity_error(a) -> float:
    a = _check_square(a)
    return float(np.max(np.abs(a - a.conj().T)))


def unitarity_error(u) -> float:
    u = _check_square(u)
    return float(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))))


def is_unitary(u, atol: float = DEFAULT_TOLERANCES.structural) -> bool:
    return unitarity_error(u) <= atol


def is_density_matrix(rho, atol: float = DEFAULT_TOLERANCES.structural, check_psd: bool = False) -> bool:
    """Hermitian with unit trace; eigenvalue check only when ``check_psd``."""
    rho = _check_square(rho)
    if hermiticity_error(rho) > atol or abs(np.trace(rho) - 1.0) > atol:
        return False
    if check_psd:
        return bool(np.linalg.eigvalsh(rho).min() >= -DEFAULT_TOLERANCES.psd)
    return True


def gram_deviation(vectors) -> float:
    """max |G - I| for the Gram matrix of the rows of ``vectors``."""
    vs = np.asarray(vectors, dtype=complex)
    g = vs.conj() @ vs.T
    return float(np.max(np.abs(g - np.eye(vs.shape[0]))))
