"""Maximally entangled two-qudit states |c,r;s>.

    |c,r;s> = d**-0.5 * sum_n |n>_1 |c-n>_2 omega**(s n^2 - 2 r n)

For fixed ``s`` the d^2 states with (c, r) in Z_d x Z_d form an orthonormal
basis of the two-qudit space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .linalg import gram_deviation, reduced_states
from .modmath import as_dim, phases
from .report import VerificationReport


@dataclass(frozen=True)
class Preparation:
    """Alice's state label (c, r, s)."""

    c: int
    r: int
    s: int

    def reduced(self, d) -> "Preparation":
        d = as_dim(d)
        return Preparation(self.c % d, self.r % d, self.s % d)

    def __str__(self):
        return f"{self.c},{self.r},{self.s}"

    @classmethod
    def parse(cls, text: str, d) -> "Preparation":
        d = as_dim(d)
        parts = [p.strip() for p in str(text).split(",")]
        if len(parts) != 3:
            raise ValueError(f"preparation must be 'c,r,s', got {text!r}")
        try:
            c, r, s = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"preparation components must be integers, got {text!r}") from None
        for name, v in zip("crs", (c, r, s)):
            if not 0 <= v < d:
                raise ValueError(f"preparation component {name}={v} must lie in [0, {d})")
        return cls(c, r, s)


def all_preparations(d) -> list[Preparation]:
    d = as_dim(d)
    return [Preparation(c, r, s) for c, r, s in itertools.product(range(d), repeat=3)]


def entangled_state(d, prep: Preparation) -> np.ndarray:
    d = as_dim(d)
    c, r, s = prep.c, prep.r, prep.s
    n = np.arange(d, dtype=np.int64)
    psi = np.zeros(d * d, dtype=complex)
    psi[n * d + (c - n) % d] = phases(d, s * n * n - 2 * r * n) / np.sqrt(d)
    return psi


def entangled_basis(d, s: int) -> np.ndarray:
    """The d^2 states of fixed ``s`` as rows; row ``c*d + r`` is |c,r;s>."""
    d = as_dim(d)
    n = np.arange(d, dtype=np.int64)
    c = np.repeat(np.arange(d), d)
    r = np.tile(np.arange(d), d)
    rows = np.zeros((d * d, d * d), dtype=complex)
    cols = n[None, :] * d + (c[:, None] - n[None, :]) % d
    amps = phases(d, s * n[None, :] ** 2 - 2 * r[:, None] * n[None, :]) / np.sqrt(d)
    np.put_along_axis(rows, cols, amps, axis=1)
    return rows


def verify_entangled_basis(d, s: int, tol: float = DEFAULT_TOLERANCES.structural) -> VerificationReport:
    d = as_dim(d)
    states = entangled_basis(d, s)
    mixed = np.eye(d) / d
    marginal = 0.0
    for psi in states:
        rho1, rho2 = reduced_states(psi, d)
        marginal = max(marginal, float(np.max(np.abs(rho1 - mixed))), float(np.max(np.abs(rho2 - mixed))))
    return VerificationReport(
        "entangled_basis",
        d,
        tol,
        {"orthonormality": gram_deviation(states), "marginal_mixedness": marginal},
        {"s": int(s) % d},
    )
