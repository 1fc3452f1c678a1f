# %% [markdown]
# # Entangled preparations and Bob's non-selective measurement

# %%
import numpy as np

from mubsignal.channel import DephasingChannel, apply_nonselective, channel_from_unitary_average
from mubsignal.entangle import Preparation, entangled_state, verify_entangled_basis
from mubsignal.linalg import frobenius_distance, purity, reduced_states
from mubsignal.mub import COMPUTATIONAL, Fourier

d = 3
prep = Preparation(c=1, r=2, s=0)
psi = entangled_state(d, prep)
print(np.round(psi.reshape(d, d), 3))

# %% [markdown]
# Bob's half alone is maximally mixed, and for fixed s the d^2 states form
# an orthonormal basis.

# %%
rho_bob, rho_alice = reduced_states(psi, d)
print(np.round(rho_bob, 6))
print(verify_entangled_basis(d, s=0).deviations)

# %% [markdown]
# Measuring qudit 1 in basis b and discarding the result dephases it in
# that basis. Averaging over the d harmonic unitaries diagonal in the same
# basis gives the same state.

# %%
for label in (COMPUTATIONAL, Fourier(0), Fourier(2)):
    rho = apply_nonselective(psi, DephasingChannel(d, label))
    avg = channel_from_unitary_average(psi, d, label)
    print(label, "purity", round(purity(rho), 12), "dual-path distance", frobenius_distance(rho, avg))
