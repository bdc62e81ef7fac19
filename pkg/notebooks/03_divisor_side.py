# %% [markdown]
# # Divisor sums and Moebius inversion

# %%
from partition_identities.arith import divisor_transform, divisors, mobius, mobius_inverse, sigma, tau_odd
from partition_identities.seqexpr import materialize

print("divisors(12) =", divisors(12))
print("sigma_1(12) =", sigma(1, 12), " tau_odd(12) =", tau_odd(12), " mu(30) =", mobius(30))

# %%
a = materialize("n^2 - n", 12)
b = divisor_transform(a)
print("a      :", [str(x) for x in a.values])
print("sum_d|n:", [str(x) for x in b.values])
print("inverse recovers a:", mobius_inverse(b) == a)
