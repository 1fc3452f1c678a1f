"""Invariant suites for one dimension, as used by ``mubsignal verify``.

Suites that need two-qudit density matrices run exhaustively for small d
and on a seeded random sample of cases otherwise. They are skipped above
``MAX_DENSE_DIM`` where a single d^2 x d^2 matrix no longer fits
comfortably in memory.
"""

from __future__ import annotations

import itertools

import numpy as np

from .channel import (
    DephasingChannel,
    apply_nonselective,
    channel_from_unitary_average,
    dephasing_error,
    diagonal_unitary,
    trace_error,
)
from .config import DEFAULT_TOLERANCES, Tolerances
from .entangle import Preparation, all_preparations, entangled_state, verify_entangled_basis
from .linalg import frobenius_distance, hermiticity_error, purity
from .modmath import as_dim
from .mub import COMPUTATIONAL, Fourier, all_labels, mub_ket, verify_eigenoperators, verify_mub, verify_pauli
from .protocol import INCONCLUSIVE, Decoded, Outcome, closed_form_table, decode, outcome_probabilities
from .report import VerificationReport

MAX_DENSE_DIM = 31
EXHAUSTIVE_CHANNEL_DIM = 3
EXHAUSTIVE_ORACLE_DIM = 5


def _cases(d: int, exhaustive: bool, samples: int, seed: int):
    labels = all_labels(d)
    if exhaustive:
        return [(lab, p) for lab in labels for p in all_preparations(d)]
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(samples):
        lab = labels[int(rng.integers(d + 1))]
        c, r, s = (int(v) for v in rng.integers(0, d, size=3))
        out.append((lab, Preparation(c, r, s)))
    return out


def verify_entangled(d, tol: float = DEFAULT_TOLERANCES.structural) -> VerificationReport:
    """Entangled-basis suite over every ``s``."""
    d = as_dim(d)
    reports = [verify_entangled_basis(d, s, tol) for s in range(d)]
    merged = {k: max(r.deviations[k] for r in reports) for k in reports[0].deviations}
    return VerificationReport("entangled_basis", d, tol, merged, {"s_values": d})


def verify_channel(d, tol: float = DEFAULT_TOLERANCES.structural, samples: int = 50, seed: int = 0) -> VerificationReport:
    d = as_dim(d)
    exhaustive = d <= EXHAUSTIVE_CHANNEL_DIM
    dev = dict.fromkeys(
        ["dual_realization", "trace", "hermiticity", "idempotence", "dephased", "purity", "harmonic_group"], 0.0
    )
    cases = _cases(d, exhaustive, samples, seed)
    for label, prep in cases:
        ch = DephasingChannel(d, label)
        psi = entangled_state(d, prep)
        rho = apply_nonselective(psi, ch)
        avg = channel_from_unitary_average(psi, d, label)
        dev["dual_realization"] = max(dev["dual_realization"], frobenius_distance(rho, avg))
        dev["trace"] = max(dev["trace"], trace_error(rho))
        dev["hermiticity"] = max(dev["hermiticity"], hermiticity_error(rho))
        dev["idempotence"] = max(dev["idempotence"], frobenius_distance(ch.apply_density(rho), rho))
        dev["dephased"] = max(dev["dephased"], dephasing_error(rho, ch))
        dev["purity"] = max(dev["purity"], abs(purity(rho) - 1.0 / d))
    for label in all_labels(d):
        u1 = diagonal_unitary(d, label, 1)
        for k in range(d):
            uk = diagonal_unitary(d, label, k)
            step = float(np.max(np.abs(u1 @ uk - diagonal_unitary(d, label, k + 1))))
            dev["harmonic_group"] = max(dev["harmonic_group"], step)
    return VerificationReport("channel", d, tol, dev, {"cases": len(cases), "exhaustive": exhaustive})


def verify_oracle(d, tol: float = DEFAULT_TOLERANCES.oracle, samples: int = 50, seed: int = 0) -> VerificationReport:
    """Closed-form outcome probabilities against the density-matrix route."""
    d = as_dim(d)
    exhaustive = d <= EXHAUSTIVE_ORACLE_DIM
    cases = _cases(d, exhaustive, samples, seed)
    worst = mass = 0.0
    for label, prep in cases:
        brute = outcome_probabilities(d, label, prep)
        worst = max(worst, float(np.max(np.abs(brute - closed_form_table(d, label, prep)))))
        mass = max(mass, abs(float(brute.sum()) - 1.0))
    return VerificationReport(
        "oracle",
        d,
        tol,
        {"closed_form_vs_brute_force": worst, "total_mass": mass},
        {"comparisons": len(cases) * d * d, "exhaustive": exhaustive},
    )


def verify_decoding(d, tol: float = DEFAULT_TOLERANCES.oracle, samples: int = 50, seed: int = 0) -> VerificationReport:
    """Zero-error decoding, inconclusive mass 1/d and pairwise support intersections.

    Deviations are counts of violations, except ``inconclusive_mass``.
    """
    d = as_dim(d)
    exhaustive = d <= EXHAUSTIVE_ORACLE_DIM
    if exhaustive:
        preps = all_preparations(d)
    else:
        preps = sorted({p for _, p in _cases(d, False, samples, seed)}, key=lambda p: (p.c, p.r, p.s))
    labels = all_labels(d)
    errors = 0
    bad_intersections = 0
    mass = 0.0
    for prep in preps:
        supports = []
        for label in labels:
            table = closed_form_table(d, label, prep)
            mass = max(mass, abs(table[prep.c, prep.r] - 1.0 / d))
            support = set(zip(*np.nonzero(table > 0)))
            supports.append(support)
            for cp, rp in support:
                res = decode(d, prep, Outcome(int(cp), int(rp)))
                if (cp, rp) == (prep.c, prep.r):
                    errors += res != INCONCLUSIVE
                else:
                    errors += res != Decoded(label)
        for a, b in itertools.combinations(supports, 2):
            bad_intersections += (a & b) != {(prep.c, prep.r)}
    return VerificationReport(
        "decoding",
        d,
        tol,
        {"decode_errors": float(errors), "inconclusive_mass": mass, "support_intersections": float(bad_intersections)},
        {"preparations": len(preps), "exhaustive": exhaustive},
    )


def verify_qubit_convention(tol: float = DEFAULT_TOLERANCES.structural) -> VerificationReport:
    """d = 2 kets and states written out by hand with i in place of omega."""
    h = 2 ** -0.5
    checks = [
        (mub_ket(2, Fourier(0), 0), np.array([h, h])),
        (mub_ket(2, Fourier(0), 1), np.array([h, -h])),
        (mub_ket(2, Fourier(1), 0), np.array([h, 1j * h])),
        (mub_ket(2, Fourier(1), 1), np.array([h, -1j * h])),
        (mub_ket(2, COMPUTATIONAL, 1), np.array([0, 1])),
        (entangled_state(2, Preparation(0, 0, 0)), np.array([h, 0, 0, h])),
        (entangled_state(2, Preparation(0, 0, 1)), np.array([h, 0, 0, 1j * h])),
    ]
    worst = max(float(np.max(np.abs(a - b))) for a, b in checks)
    return VerificationReport("qubit_convention", 2, tol, {"explicit_kets": worst})


def run_all(d, tolerances: Tolerances = DEFAULT_TOLERANCES, samples: int = 50, seed: int = 0) -> list[VerificationReport]:
    d = as_dim(d)
    st, orc = tolerances.structural, tolerances.oracle
    reports = [verify_mub(d, st), verify_pauli(d, st)]
    if d == 2:
        reports.append(verify_qubit_convention(st))
    else:
        reports.append(verify_eigenoperators(d, st))
    reports.append(verify_decoding(d, orc, samples, seed))
    if d <= MAX_DENSE_DIM:
        reports += [
            verify_entangled(d, st),
            verify_channel(d, st, samples, seed),
            verify_oracle(d, orc, samples, seed),
        ]
    return reports
