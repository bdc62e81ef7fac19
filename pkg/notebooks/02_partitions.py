# %% [markdown]
# # Partitions and their statistics
#
# A partition is a multiplicity vector (k_1, k_2, ...).  The statistics are
# the number of parts k, the number of distinct parts Q, and the smallest
# and largest parts s and l.

# %%
from partition_identities.partition import Partition, enumerate_partitions, stats, stats_histogram

p = Partition.from_parts([1, 2, 3, 2, 1])
print(p, p.mult, stats(p))

# %%
for p in enumerate_partitions(6):
    st = stats(p)
    print(f"{str(p):<12} k={st.k} Q={st.Q} s={st.s} l={st.l}")

# %% [markdown]
# Weighted sums only need how many partitions share each (k, Q, s, l).

# %%
hist = stats_histogram(20)
print(len(hist), "distinct statistic tuples among", sum(hist.values()), "partitions of 20")
