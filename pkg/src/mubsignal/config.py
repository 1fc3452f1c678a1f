"""Tolerance constants shared by the verification suites.

Defaults can be overridden through the environment variables
``MUBSIGNAL_TOL_STRUCTURAL`` and ``MUBSIGNAL_TOL_ORACLE``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

MAX_DIM = 97


@dataclass(frozen=True)
class Tolerances:
    # orthonormality, unitarity, trace, channel equivalence
    structural: float = 1e-12
    # closed form vs brute-force density-matrix probabilities
    oracle: float = 1e-10
    # eigenvalue floor for the PSD spot check
    psd: float = 1e-10

    @classmethod
    def from_env(cls, environ=None) -> "Tolerances":
        env = os.environ if environ is None else environ
        tol = cls()
        if "MUBSIGNAL_TOL_STRUCTURAL" in env:
            tol = replace(tol, structural=float(env["MUBSIGNAL_TOL_STRUCTURAL"]))
        if "MUBSIGNAL_TOL_ORACLE" in env:
            tol = replace(tol, oracle=float(env["MUBSIGNAL_TOL_ORACLE"]))
        return tol


DEFAULT_TOLERANCES = Tolerances()
