# %% [markdown]
# # Mutually unbiased bases in prime dimension
#
# For a prime d there are d+1 bases: the computational one (``ddot0``) and d
# "Fourier" bases whose kets have flat amplitudes with quadratic phases.

# %%
import itertools

import numpy as np

from mubsignal.mub import Fourier, all_labels, eigenoperator, mub_basis, mub_ket, verify_mub

d = 3
for label in all_labels(d):
    print(f"basis {label}:")
    print(np.round(mub_basis(d, label), 3))

# %% [markdown]
# Any two kets from different bases overlap with squared modulus 1/d.

# %%
bases = {str(lab): mub_basis(d, lab) for lab in all_labels(d)}
for (na, a), (nb, b) in itertools.combinations(bases.items(), 2):
    print(na, nb, np.round(np.abs(a.conj() @ b.T) ** 2, 6).max())
print(verify_mub(d).to_dict())

# %% [markdown]
# For a qubit the protocol replaces omega by i. The three bases are then the
# X, Y and Z eigenbases.

# %%
print("|0;0> =", mub_ket(2, Fourier(0), 0))
print("|0;1> =", mub_ket(2, Fourier(1), 0))

# %% [markdown]
# Each Fourier basis b is the eigenbasis of X Z^(2b).

# %%
for b in range(d):
    op = eigenoperator(d, b)
    ket = mub_ket(d, Fourier(b), 1)
    lam = np.vdot(ket, op @ ket)
    print(b, np.round(lam, 6), np.linalg.norm(op @ ket - lam * ket))
