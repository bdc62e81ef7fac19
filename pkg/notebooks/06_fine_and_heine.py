# %% [markdown]
# # Product-to-partition expansion and the Heine transformation

# %%
from fractions import Fraction

from partition_identities.identity import FineSpec, fine_check, heine_check, heine_proof_instance
from partition_identities.ring import PolyTU

t, u = PolyTU.t(), PolyTU.u()
N = 8
# psi_j(q) = 1 + tu q + t^2 u q^2 + ..., except psi_1 loses its constant term
spec = FineSpec.from_rule(N, N, lambda j, k: (PolyTU.const(0 if j == 1 else 1) if k == 0 else t**k * u))
rep = fine_check(spec, N)
print(rep.overall)
print(rep.rows[3].lhs)

# %%
for tv in (2, 3, -2):
    for n in (1, 2, 3):
        print(f"t={tv} n={n}:", heine_check(*heine_proof_instance(tv, n), 12).overall)

# %%
print(heine_check((Fraction(1), 1), (Fraction(1), 1), (Fraction(1), 2), (Fraction(0), 1), 8).table())
