# %% [markdown]
# # Coefficient rings and truncated q-series
#
# Everything is exact. Evaluated mode uses `Fraction`; symbolic mode uses
# `PolyTU`, Laurent in `t` and polynomial in `u`.

# %%
from fractions import Fraction

from partition_identities.ring import PolyTU, ring_inverse
from partition_identities.series import TruncatedSeries, poch_finite, poch_infinite, s_reciprocal

t, u = PolyTU.t(), PolyTU.u()
w = (t - 1) * ring_inverse(t)  # (t-1)/t is Laurent in t
print("w   =", w)
print("w^2 =", w**2)
print("w at t=-1:", w.eval(-1))

# %% [markdown]
# Pochhammer products are built modulo q^(N+1).  The Euler product
# (q; q)_inf starts 1 - q - q^2 + q^5 + q^7 - ...

# %%
N = 12
euler = poch_infinite(Fraction(1), 1, N)
print(euler)
print("1/(q;q)_inf =", s_reciprocal(euler))

# %%
print("(tq; q)_3 =", poch_finite(t, 1, 3, 6))
print("1/(1 - tq) =", s_reciprocal(TruncatedSeries([PolyTU.one(), -t], 5)))
