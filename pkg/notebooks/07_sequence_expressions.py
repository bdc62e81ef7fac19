# %% [markdown]
# # Sequence expressions

# %%
from partition_identities.errors import ParseError
from partition_identities.seqexpr import eval_at, materialize, parse, pretty_print

e = parse("(1-(-1)^n)/2")
print(e)
print(pretty_print(e))
print([str(eval_at(e, n)) for n in range(1, 9)])
print([str(x) for x in materialize("n^2/(n+1)", 6).values])

# %%
try:
    parse("n +")
except ParseError as err:
    print(err)
