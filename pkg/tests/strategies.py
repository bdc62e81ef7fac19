
from hypothesis import strategies as st

from partition_identities.ring import PolyTU

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda x: x != 0)

polys = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(0, 3)),
    rationals,
    max_size=5,
).map(PolyTU)

t_units = st.builds(lambda c, e: PolyTU.monomial(c, e, 0), nonzero_rationals, st.integers(-4, 4))

def series_of(elements, order):
    from partition_identities.series import TruncatedSeries

    return st.lists(elements, min_size=order + 1, max_size=order + 1).map(lambda cs: TruncatedSeries(cs, order))
