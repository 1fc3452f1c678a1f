"""End-to-end signaling protocol.

Alice prepares |c,r;s>, Bob measures qudit 1 in the basis named by his
message and discards the result, and Alice measures both qudits in the
fixed-``s`` entangled basis. The outcome (c', r') reveals the basis except
when it equals (c, r).
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .channel import DephasingChannel, apply_nonselective
from .entangle import Preparation, entangled_basis, entangled_state
from .modmath import as_dim, mod_inv
from .mub import COMPUTATIONAL, BasisLabel, Computational, Fourier, all_labels, label_index


@dataclass(frozen=True)
class Outcome:
    c_prime: int
    r_prime: int

    def __str__(self):
        return f"{self.c_prime},{self.r_prime}"


@dataclass(frozen=True)
class Decoded:
    label: BasisLabel

    def __str__(self):
        return str(self.label)


@dataclass(frozen=True)
class Inconclusive:
    def __str__(self):
        return "inconclusive"


INCONCLUSIVE = Inconclusive()
DecodeResult = Union[Decoded, Inconclusive]


def all_outcomes(d) -> list[Outcome]:
    """Row-major order: index ``c' * d + r'``."""
    d = as_dim(d)
    return [Outcome(c, r) for c, r in itertools.product(range(d), repeat=2)]


# --- exact statistics ------------------------------------------------------


def closed_form_probability(d, message: BasisLabel, prep: Preparation, out: Outcome) -> float:
    d = as_dim(d)
    c, r, s = prep.c, prep.r, prep.s
    cp, rp = out.c_prime, out.r_prime
    if isinstance(message, Computational):
        hit = (c - cp) % d == 0
    else:
        k = message.b - s
        hit = (k * c + r - k * cp - rp) % d == 0
    return 1.0 / d if hit else 0.0


def closed_form_table(d, message: BasisLabel, prep: Preparation) -> np.ndarray:
    """All outcome probabilities from the closed form, shape (d, d) indexed [c', r']."""
    d = as_dim(d)
    cp = np.arange(d)[:, None]
    rp = np.arange(d)[None, :]
    if isinstance(message, Computational):
        hit = np.broadcast_to((prep.c - cp) % d == 0, (d, d))
    else:
        k = message.b - prep.s
        hit = (k * prep.c + prep.r - k * cp - rp) % d == 0
    return hit / d


def outcome_probabilities(d, message: BasisLabel, prep: Preparation) -> np.ndarray:
    """Brute-force outcome probabilities, shape (d, d) indexed [c', r'].

    Builds the prepared state, applies the dephasing channel as a density
    matrix and projects onto every state of Alice's measurement basis.
    """
    d = as_dim(d)
    rho = apply_nonselective(entangled_state(d, prep), DephasingChannel(d, message))
    alice = entangled_basis(d, prep.s)
    probs = np.sum((alice.conj() @ rho) * alice, axis=1).real
    return probs.reshape(d, d)


def outcome_distribution(d, message: BasisLabel, prep: Preparation) -> dict[Outcome, float]:
    d = as_dim(d)
    probs = outcome_probabilities(d, message, prep)
    return {o: float(probs[o.c_prime, o.r_prime]) for o in all_outcomes(d)}


# --- decoding ----------------------------------------------------------------


def decode(d, prep: Preparation, out: Outcome) -> DecodeResult:
    """Three-row decoding table.

    c' != c           -> b = s + (r - r') / (c' - c)
    c' == c, r' != r  -> ddot0
    c' == c, r' == r  -> inconclusive
    """
    d = as_dim(d)
    dc = (out.c_prime - prep.c) % d
    dr = (prep.r - out.r_prime) % d
    if dc != 0:
        return Decoded(Fourier((prep.s + dr * mod_inv(dc, d)) % d))
    if dr != 0:
        return Decoded(COMPUTATIONAL)
    return INCONCLUSIVE


# --- sampling ----------------------------------------------------------------


def round_rng(seed: int, k: int) -> np.random.Generator:
    """Independent generator for round ``k`` of a run seeded with ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(k),)))


def _inverse_cdf(probs: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Row-wise inverse-CDF draw; never returns a zero-probability atom."""
    cdf = np.cumsum(probs, axis=1)
    total = cdf[:, -1]
    idx = np.sum(cdf <= (u * total)[:, None], axis=1)
    last = probs.shape[1] - 1 - np.argmax(probs[:, ::-1] > 0, axis=1)
    return np.where(idx > last, last, idx)


def sample_outcome(rng: np.random.Generator, d, message: BasisLabel, prep: Preparation) -> Outcome:
    d = as_dim(d)
    probs = closed_form_table(d, message, prep).reshape(1, d * d)
    idx = int(_inverse_cdf(probs, np.array([rng.random()]))[0])
    return Outcome(idx // d, idx % d)


def simulate_round(rng: np.random.Generator, d, prep: Preparation, message: BasisLabel):
    """One use of the channel: returns ``(Outcome, DecodeResult)``."""
    out = sample_outcome(rng, d, message, prep)
    return out, decode(d, prep, out)


def normalize_prior(prior, d) -> np.ndarray:
    """Validate a prior over ``all_labels(d)``; ``None`` means uniform."""
    d = as_dim(d)
    if prior is None:
        return np.full(d + 1, 1.0 / (d + 1))
    if isinstance(prior, dict):
        if not prior:
            raise ValueError("message prior is empty")
        weights = np.zeros(d + 1)
        for label, w in prior.items():
            weights[label_index(label, d)] += w
    else:
        weights = np.asarray(prior, dtype=float)
        if weights.size == 0:
            raise ValueError("message prior is empty")
        if weights.shape != (d + 1,):
            raise ValueError(f"message prior needs {d + 1} weights, got {weights.size}")
    if np.any(weights < 0) or not np.isfinite(weights).all():
        raise ValueError("message prior weights must be finite and non-negative")
    total = weights.sum()
    if total <= 0:
        raise ValueError("message prior has zero total weight")
    return weights / total


@dataclass
class TrialStats:
    """Aggregated counts of a Monte Carlo run.

    ``confusion[i, j]`` counts rounds where label ``i`` was sent and label
    ``j`` decoded (labels ordered as in :func:`all_labels`).
    """

    d: int
    trials: int = 0
    conclusive: int = 0
    confusion: np.ndarray = field(default=None)
    inconclusive_per_message: np.ndarray = field(default=None)
    sent_per_message: np.ndarray = field(default=None)

    def __post_init__(self):
        n = self.d + 1
        if self.confusion is None:
            self.confusion = np.zeros((n, n), dtype=np.int64)
        if self.inconclusive_per_message is None:
            self.inconclusive_per_message = np.zeros(n, dtype=np.int64)
        if self.sent_per_message is None:
            self.sent_per_message = np.zeros(n, dtype=np.int64)

    @property
    def conclusive_rate(self) -> float:
        return self.conclusive / self.trials if self.trials else 0.0

    @property
    def decoding_errors(self) -> int:
        return int(self.confusion.sum() - np.trace(self.confusion))

    def merge(self, other: "TrialStats") -> "TrialStats":
        return TrialStats(
            self.d,
            self.trials + other.trials,
            self.conclusive + other.conclusive,
            self.confusion + other.confusion,
            self.inconclusive_per_message + other.inconclusive_per_message,
            self.sent_per_message + other.sent_per_message,
        )

    def to_dict(self) -> dict:
        names = [str(lab) for lab in all_labels(self.d)]
        return {
            "trials": self.trials,
            "conclusive": self.conclusive,
            "inconclusive": self.trials - self.conclusive,
            "conclusive_rate": self.conclusive_rate,
            "decoding_errors": self.decoding_errors,
            "labels": names,
            "confusion": {
                sent: {dec: int(self.confusion[i, j]) for j, dec in enumerate(names)}
                for i, sent in enumerate(names)
            },
            "sent_per_message": {n: int(v) for n, v in zip(names, self.sent_per_message)},
            "inconclusive_per_message": {n: int(v) for n, v in zip(names, self.inconclusive_per_message)},
        }


def _draw_round(seed, k, d, prep_policy, cdf_prior):
    """Message, preparation and the outcome uniform for round k, in a fixed order."""
    rng = round_rng(seed, k)
    msg = min(int(np.searchsorted(cdf_prior, rng.random(), side="right")), d)
    if isinstance(prep_policy, Preparation):
        c, r, s = prep_policy.c, prep_policy.r, prep_policy.s
    else:
        c, r, s = (int(v) for v in rng.integers(0, d, size=3))
    return msg, c, r, s, rng.random()


def _batch_tables(d, msg, c, r, s):
    """Closed-form outcome tables for a batch of rounds, shape (B, d*d)."""
    cp = np.arange(d)[None, :, None]
    rp = np.arange(d)[None, None, :]
    msg, c, r, s = (a[:, None, None] for a in (msg, c, r, s))
    k = msg - 1 - s
    fourier = (k * c + r - k * cp - rp) % d == 0
    comp = np.broadcast_to((c - cp) % d == 0, fourier.shape)
    hit = np.where(msg == 0, comp, fourier)
    return (hit / d).reshape(hit.shape[0], d * d)


def _run_block(args) -> TrialStats:
    seed, d, prep_policy, prior, start, stop = args
    stats = TrialStats(d)
    if stop <= start:
        return stats
    cdf_prior = np.cumsum(prior)
    cdf_prior /= cdf_prior[-1]
    draws = np.array([_draw_round(seed, k, d, prep_policy, cdf_prior) for k in range(start, stop)])
    msg, c, r, s = (draws[:, i].astype(np.int64) for i in range(4))
    u = draws[:, 4]
    chunk = max(1, 2**20 // (d * d))
    idx = np.concatenate(
        [_inverse_cdf(_batch_tables(d, msg[i:i + chunk], c[i:i + chunk], r[i:i + chunk], s[i:i + chunk]), u[i:i + chunk])
         for i in range(0, len(msg), chunk)]
    )
    for m, ci, ri, si, j in zip(msg, c, r, s, idx):
        prep = Preparation(int(ci), int(ri), int(si))
        result = decode(d, prep, Outcome(int(j) // d, int(j) % d))
        stats.sent_per_message[m] += 1
        if isinstance(result, Inconclusive):
            stats.inconclusive_per_message[m] += 1
        else:
            stats.conclusive += 1
            stats.confusion[m, label_index(result.label, d)] += 1
    stats.trials = stop - start
    return stats


def run_trials(
    seed: int,
    d,
    prep_policy: Union[Preparation, str] = "uniform",
    message_prior: Union[Sequence[float], dict, None] = None,
    n: int = 1,
    workers: int | None = None,
) -> TrialStats:
    """Monte Carlo run of ``n`` protocol rounds.

    Round ``k`` draws from its own generator ``round_rng(seed, k)``, so the
    result does not depend on ``workers`` (``None`` or 1 runs serially).
    ``prep_policy`` is a fixed :class:`Preparation` or ``"uniform"`` to
    resample (c, r, s) each round.
    """
    d = as_dim(d)
    if n < 1:
        raise ValueError(f"number of trials must be >= 1, got {n}")
    if isinstance(prep_policy, Preparation):
        prep_policy = prep_policy.reduced(d)
    elif prep_policy != "uniform":
        raise ValueError(f"prep_policy must be a Preparation or 'uniform', got {prep_policy!r}")
    prior = normalize_prior(message_prior, d)

    if not workers or workers <= 1:
        return _run_block((seed, d, prep_policy, prior, 0, n))
    workers = min(int(workers), os.cpu_count() or 1, n)
    bounds = np.linspace(0, n, workers + 1).astype(int)
    jobs = [(seed, d, prep_policy, prior, int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:])]
    total = TrialStats(d)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_run_block, jobs):
            total = total.merge(part)
    return total
