"""The d+1 mutually unbiased bases of a prime-dimensional qudit.

Besides the computational basis (label ``ddot0``) there are d "Fourier"
bases with kets

    |m;b> = d**-0.5 * sum_n omega**(b n^2 - 2 n m) |n>,

and the generalized Pauli shift/clock operators used to characterise them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .config import DEFAULT_TOLERANCES
from .linalg import gram_deviation, unitarity_error
from .modmath import as_dim, clock_phase, phases
from .report import VerificationReport

COMPUTATIONAL_TOKEN = "ddot0"


@dataclass(frozen=True)
class Computational:
    """The eigenbasis of Z, written ``ddot0``."""

    def __str__(self):
        return COMPUTATIONAL_TOKEN


@dataclass(frozen=True)
class Fourier:
    """One of the d bases parametrised by ``b`` in Z_d."""

    b: int

    def __post_init__(self):
        if isinstance(self.b, bool) or int(self.b) != self.b or self.b < 0:
            raise ValueError(f"Fourier basis index must be a non-negative integer, got {self.b!r}")
        object.__setattr__(self, "b", int(self.b))

    def __str__(self):
        return str(self.b)


BasisLabel = Union[Computational, Fourier]

COMPUTATIONAL = Computational()


def all_labels(d) -> list[BasisLabel]:
    """``[ddot0, 0, 1, ..., d-1]``; this order indexes priors and channel rows."""
    d = as_dim(d)
    return [COMPUTATIONAL] + [Fourier(b) for b in range(d)]


def parse_label(token, d) -> BasisLabel:
    d = as_dim(d)
    if isinstance(token, (Computational, Fourier)):
        label = token
    elif str(token).strip().lower() == COMPUTATIONAL_TOKEN:
        return COMPUTATIONAL
    else:
        try:
            label = Fourier(int(str(token).strip()))
        except ValueError:
            raise ValueError(f"basis label must be 'ddot0' or an integer in [0, {d}), got {token!r}") from None
    if isinstance(label, Fourier) and label.b >= d:
        raise ValueError(f"basis label {label.b} out of range for d={d}")
    return label


def label_index(label: BasisLabel, d) -> int:
    """Position of ``label`` in :func:`all_labels`."""
    if isinstance(label, Computational):
        return 0
    return 1 + label.b % as_dim(d)


def mub_ket(d, label: BasisLabel, m) -> np.ndarray:
    d = as_dim(d)
    m = int(m) % d
    if isinstance(label, Computational):
        v = np.zeros(d, dtype=complex)
        v[m] = 1.0
        return v
    n = np.arange(d, dtype=np.int64)
    return phases(d, label.b * n * n - 2 * n * m) / np.sqrt(d)


def mub_basis(d, label: BasisLabel) -> np.ndarray:
    """All kets of one basis as the rows of a d x d array (row m is |m;b>)."""
    d = as_dim(d)
    if isinstance(label, Computational):
        return np.eye(d, dtype=complex)
    n = np.arange(d, dtype=np.int64)
    m = n[:, None]
    return phases(d, label.b * n[None, :] ** 2 - 2 * n[None, :] * m) / np.sqrt(d)


@dataclass(frozen=True)
class MubBasis:
    label: BasisLabel
    kets: np.ndarray
    dim: int


def all_bases(d) -> list[MubBasis]:
    d = as_dim(d)
    return [MubBasis(label, mub_basis(d, label), d) for label in all_labels(d)]


def pauli_x(d) -> np.ndarray:
    """Cyclic shift, X|n> = |n+1 mod d>."""
    d = as_dim(d)
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def pauli_z(d) -> np.ndarray:
    """Clock, Z|n> = exp(2 pi i n / d)|n>; diag(1, -1) for a qubit."""
    d = as_dim(d)
    return np.diag([clock_phase(d, n) for n in range(d)])


def verify_mub(d, tol: float = DEFAULT_TOLERANCES.structural) -> VerificationReport:
    d = as_dim(d)
    bases = [mub_basis(d, label) for label in all_labels(d)]
    ortho = max(gram_deviation(k) for k in bases)
    unbiased = 0.0
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            overlaps = np.abs(bases[i].conj() @ bases[j].T) ** 2
            unbiased = max(unbiased, float(np.max(np.abs(overlaps - 1.0 / d))))
    flat = max(float(np.max(np.abs(np.abs(k) - d ** -0.5))) for k in bases[1:])
    return VerificationReport(
        "mub",
        d,
        tol,
        {"orthonormality": ortho, "unbiasedness": unbiased, "flatness": flat},
        {"bases": d + 1, "basis_pairs": d * (d + 1) // 2},
    )


def verify_pauli(d, tol: float = DEFAULT_TOLERANCES.structural) -> VerificationReport:
    """Unitarity, order d, and the Weyl relation ZX = omega XZ."""
    d = as_dim(d)
    x, z = pauli_x(d), pauli_z(d)
    eye = np.eye(d)
    weyl = float(np.max(np.abs(z @ x - clock_phase(d, 1) * x @ z)))
    order = max(
        float(np.max(np.abs(np.linalg.matrix_power(x, d) - eye))),
        float(np.max(np.abs(np.linalg.matrix_power(z, d) - eye))),
    )
    return VerificationReport(
        "pauli",
        d,
        tol,
        {"unitarity": max(unitarity_error(x), unitarity_error(z)), "order": order, "weyl": weyl},
    )


def eigenoperator(d, b: int) -> np.ndarray:
    """X Z^(2b), whose eigenvectors are the kets of Fourier basis b (odd d)."""
    d = as_dim(d)
    return pauli_x(d) @ np.linalg.matrix_power(pauli_z(d), (2 * b) % d)


def _root_of_unity_error(z: complex, d: int) -> float:
    """Distance from ``z`` to the nearest d-th root of unity."""
    k = round(np.angle(z) * d / (2 * np.pi))
    return float(abs(z - np.exp(2j * np.pi * k / d)))


def verify_eigenoperators(d, tol: float = DEFAULT_TOLERANCES.structural) -> VerificationReport:
    """Residuals of every MUB ket against its commuting operator.

    Fourier kets are checked against X Z^(2b) and computational kets
    against Z. Eigenvalues are Rayleigh quotients and must be d-th roots of
    unity. Only defined for odd primes.
    """
    d = as_dim(d)
    if d == 2:
        raise ValueError("the eigenoperator check is defined for odd prime d only")
    residual = 0.0
    root = 0.0
    ops = [(COMPUTATIONAL, pauli_z(d))] + [(Fourier(b), eigenoperator(d, b)) for b in range(d)]
    for label, op in ops:
        for ket in mub_basis(d, label):
            image = op @ ket
            lam = np.vdot(ket, image)
            residual = max(residual, float(np.linalg.norm(image - lam * ket)))
            root = max(root, _root_of_unity_error(lam, d))
    return VerificationReport(
        "eigenoperator",
        d,
        tol,
        {"eigen_residual": residual, "root_of_unity": float(root)},
    )
