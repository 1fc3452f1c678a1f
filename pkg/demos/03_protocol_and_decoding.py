# %% [markdown]
# # Outcome statistics and decoding
#
# Alice measures in her preparation basis (same s). Each message b puts mass
# 1/d on d outcomes; all messages share the inconclusive outcome (c, r).

# %%
import numpy as np

from mubsignal.entangle import Preparation
from mubsignal.mub import all_labels
from mubsignal.protocol import (
    Outcome,
    closed_form_table,
    decode,
    outcome_probabilities,
    run_trials,
)

d = 5
prep = Preparation(2, 1, 3)
for label in all_labels(d):
    exact = closed_form_table(d, label, prep)
    brute = outcome_probabilities(d, label, prep)
    support = [tuple(map(int, ix)) for ix in np.argwhere(exact > 0)]
    print(f"message {str(label):>5}: support {support}, max |closed - brute| = {np.abs(exact - brute).max():.1e}")

# %% [markdown]
# Decoding every outcome in a message's support recovers that message,
# except at (c, r).

# %%
for label in all_labels(d):
    exact = closed_form_table(d, label, prep)
    decoded = {str(decode(d, prep, Outcome(*map(int, ix)))) for ix in np.argwhere(exact > 0)}
    print(label, "->", sorted(decoded))

# %% [markdown]
# A seeded Monte Carlo run: zero decoding errors, conclusive rate near (d-1)/d.

# %%
stats = run_trials(seed=7, d=d, prep_policy="uniform", message_prior=None, n=20_000)
print("conclusive rate", stats.conclusive_rate, "expected", (d - 1) / d)
print("decoding errors", stats.decoding_errors)
print(stats.confusion)
