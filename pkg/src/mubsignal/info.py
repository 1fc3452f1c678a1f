"""Classical information carried by the basis choice.

The protocol induces a discrete channel from Bob's d+1 messages to Alice's
d^2 outcomes. Each message spreads its mass 1/d over d outcomes, one of
which is the shared inconclusive outcome (c, r); the remaining d-1 are
owned by that message alone. For a uniform prior this gives

    I = ((d - 1) / d) * log2(d + 1)

bits per use, which is what :func:`closed_form_bits` returns.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .entangle import Preparation
from .modmath import as_dim
from .mub import BasisLabel, all_labels
from .protocol import (
    Inconclusive,
    Outcome,
    all_outcomes,
    closed_form_table,
    decode,
    normalize_prior,
    outcome_probabilities,
)


@dataclass
class DiscreteChannel:
    input_labels: list
    output_labels: list
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=float)
        if self.matrix.shape != (len(self.input_labels), len(self.output_labels)):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match "
                f"{len(self.input_labels)} inputs x {len(self.output_labels)} outputs"
            )

    def row_sum_error(self) -> float:
        return float(np.max(np.abs(self.matrix.sum(axis=1) - 1.0)))


def channel_matrix(d, prep: Preparation, method: str = "closed_form") -> DiscreteChannel:
    """Message -> outcome transition matrix for a fixed preparation.

    ``method`` is ``"closed_form"`` or ``"brute_force"`` (density matrices).
    """
    d = as_dim(d)
    prep = prep.reduced(d)
    if method == "closed_form":
        table = closed_form_table
    elif method == "brute_force":
        table = outcome_probabilities
    else:
        raise ValueError(f"unknown method {method!r}")
    labels = all_labels(d)
    rows = np.array([table(d, label, prep).reshape(d * d) for label in labels])
    return DiscreteChannel(labels, all_outcomes(d), rows)


def decoded_channel(d, prep: Preparation) -> DiscreteChannel:
    """Message -> decoder output, with an extra trailing ``inconclusive`` column."""
    d = as_dim(d)
    prep = prep.reduced(d)
    base = channel_matrix(d, prep)
    outputs = list(all_labels(d)) + [Inconclusive()]
    matrix = np.zeros((d + 1, d + 2))
    for j, out in enumerate(base.output_labels):
        res = decode(d, prep, out)
        col = d + 1 if isinstance(res, Inconclusive) else outputs.index(res.label)
        matrix[:, col] += base.matrix[:, j]
    return DiscreteChannel(base.input_labels, outputs, matrix)


def _xlogx(p: np.ndarray) -> np.ndarray:
    out = np.zeros_like(p)
    pos = p > 0
    out[pos] = p[pos] * np.log2(p[pos])
    return out


def mutual_information(channel: DiscreteChannel, prior=None) -> float:
    """I(input; output) in bits for the joint ``prior[i] * matrix[i, j]``."""
    n = len(channel.input_labels)
    if prior is None:
        prior = np.full(n, 1.0 / n)
    prior = np.asarray(prior, dtype=float)
    if prior.shape != (n,):
        raise ValueError(f"prior needs {n} entries, got {prior.size}")
    joint = prior[:, None] * channel.matrix
    px = joint.sum(axis=1)
    py = joint.sum(axis=0)
    # I = H(X) + H(Y) - H(X,Y)
    bits = -_xlogx(px).sum() - _xlogx(py).sum() + _xlogx(joint).sum()
    return float(max(bits, 0.0))


def closed_form_bits(d) -> float:
    d = as_dim(d)
    return (d - 1) / d * math.log2(d + 1)


@dataclass
class InfoReport:
    d: int
    mutual_information_bits: float
    closed_form_bits: float
    log2_d: float
    two_log2_d: float
    log2_d_plus_1: float
    exceeds_log2_d: bool

    def to_dict(self) -> dict:
        return asdict(self)


def info_report(d, prep: Preparation = Preparation(0, 0, 0)) -> InfoReport:
    """Uniform-prior mutual information next to the log2 d reference values."""
    d = as_dim(d)
    mi = mutual_information(channel_matrix(d, prep), normalize_prior(None, d))
    return InfoReport(
        d=d,
        mutual_information_bits=mi,
        closed_form_bits=closed_form_bits(d),
        log2_d=math.log2(d),
        two_log2_d=2 * math.log2(d),
        log2_d_plus_1=math.log2(d + 1),
        exceeds_log2_d=bool(mi > math.log2(d)),
    )


def message_posterior(d, prep: Preparation, out: Outcome, prior=None) -> dict[BasisLabel, float]:
    """Alice's posterior over messages after observing ``out``."""
    d = as_dim(d)
    ch = channel_matrix(d, prep)
    prior = normalize_prior(prior, d)
    col = ch.matrix[:, out.c_prime % d * d + out.r_prime % d] * prior
    total = col.sum()
    if total == 0:
        raise ValueError(f"outcome {out} has zero probability under this prior")
    return {label: float(p / total) for label, p in zip(ch.input_labels, col)}
