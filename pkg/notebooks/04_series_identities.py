# %% [markdown]
# # Series side vs partition side
#
# The q-series built from Pochhammer products are compared coefficient by
# coefficient with sums over partitions weighted by t^k u^Q and a term
# picked by the smallest part, the largest part, or a window between them.

# %%
from partition_identities.arith import SeqValues
from partition_identities.identity import check_identity, lhs_theorem1_series
from partition_identities.partition import wsum_smallest
from partition_identities.ring import PolyTU

t, u = PolyTU.t(), PolyTU.u()
N = 5
a = SeqValues.basis(2, N)  # isolate the coefficient of a_2
s = lhs_theorem1_series(a, t, u, N)
for n in range(1, N + 1):
    print(n, s[n], "|", wsum_smallest(n, a, t, u))

# %%
for which in ("thm1", "thm2", "thm3"):
    rep = check_identity(which, a="n^2", mode="symbolic", N=12)
    print(which, "symbolic:", rep.overall)
    rep = check_identity(which, a="(1-(-1)^n)/2", t="1/2", u="-1/3", N=20)
    print(which, "t=1/2, u=-1/3:", rep.overall)
