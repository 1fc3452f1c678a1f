"""Simulation of signaling by the choice of a non-selective measurement basis.

Bob holds half of a maximally entangled qudit pair prepared by Alice. He
measures it in one of the d+1 mutually unbiased bases, ignores the result,
and returns it; Alice recovers which basis he used from a joint measurement.
"""

from .channel import DephasingChannel, apply_nonselective, channel_from_unitary_average, diagonal_unitary
from .config import Tolerances
from .entangle import Preparation, entangled_basis, entangled_state, verify_entangled_basis
from .info import DiscreteChannel, InfoReport, channel_matrix, closed_form_bits, info_report, mutual_information
from .modmath import PrimeDim, Residue, is_prime, mod_inv, phase
from .mub import COMPUTATIONAL, Computational, Fourier, all_labels, mub_basis, mub_ket, pauli_x, pauli_z, verify_mub
from .protocol import (
    INCONCLUSIVE,
    Decoded,
    Inconclusive,
    Outcome,
    TrialStats,
    closed_form_probability,
    decode,
    outcome_distribution,
    run_trials,
    simulate_round,
)

__version__ = "0.1.0"
