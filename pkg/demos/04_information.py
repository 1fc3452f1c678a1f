# %% [markdown]
# # Information per use
#
# With a uniform prior over the d+1 messages the mutual information between
# Bob's basis and Alice's outcome is ((d-1)/d) log2(d+1). The table puts it
# next to log2 d and the 2 log2 d of super-dense coding.

# %%
from mubsignal.entangle import Preparation
from mubsignal.info import channel_matrix, decoded_channel, info_report, mutual_information

print(f"{'d':>3} {'I (bits)':>10} {'log2 d':>8} {'2 log2 d':>9} {'log2(d+1)':>10}  I > log2 d")
for d in (2, 3, 5, 7, 11, 13):
    r = info_report(d)
    print(f"{d:>3} {r.mutual_information_bits:10.6f} {r.log2_d:8.4f} {r.two_log2_d:9.4f} {r.log2_d_plus_1:10.4f}  {r.exceeds_log2_d}")

# %% [markdown]
# The decoder output is a sufficient statistic: collapsing outcomes to decoded
# labels loses nothing.

# %%
prep = Preparation(0, 1, 2)
print(mutual_information(channel_matrix(3, prep)), mutual_information(decoded_channel(3, prep)))
