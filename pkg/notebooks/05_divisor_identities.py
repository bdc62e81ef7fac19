# %% [markdown]
# # Weighted partition sums equal to divisor sums
#
# Weights t^(k-1) ((t-1)/t)^(Q-1) turn window sums over partitions into sums
# over divisors.  With differences a_i - t a_(i-1) the result stops
# depending on t and equals the divisor sum of a.

# %%
from fractions import Fraction

from partition_identities.arith import divisor_transform
from partition_identities.identity import check_identity
from partition_identities.partition import wsum_corollary2_lhs
from partition_identities.seqexpr import materialize

print(check_identity("thm4", a="n", t=2, N=8).table())

# %%
a = materialize("mod(n, 3) - 1", 15)
for n in (6, 12, 15):
    vals = {str(wsum_corollary2_lhs(n, a, Fraction(tv))) for tv in (2, -1, Fraction(5, 2))}
    print(n, vals, "divisor sum:", divisor_transform(a)[n])

# %%
for which in ("ex1", "ex2", "ex3"):
    print(which, check_identity(which, N=40).overall)
print(check_identity("cor2", a="n^3", mode="symbolic", N=6).table())
