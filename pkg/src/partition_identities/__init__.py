"""Exact verification of weighted partition identities.

Series sides are expanded as truncated q-series, partition sides by
enumerating every partition, and divisor sides by divisor loops; all
arithmetic is exact, either at rational parameter values or symbolically in
``t`` and ``u``.
"""

from .arith import (
    SeqValues,
    divisor_transform,
    divisors,
    mobius,
    mobius_inverse,
    rhs_corollary1,
    rhs_theorem4,
    sigma,
    tau_odd,
)
from .errors import (
    DivisionByZero,
    EvalAtZero,
    FineSpecInvalid,
    IdentityError,
    InvalidParameter,
    NotAUnit,
    OrderMismatch,
    ParseError,
    SequenceTooShort,
)
from .identity import (
    FineSpec,
    IdentityReport,
    check_identity,
    fine_partition_sum,
    fine_product,
    heine_check,
    lhs_theorem1_series,
    lhs_theorem2_series,
    lhs_theorem3_series,
)
from .partition import (
    Partition,
    PartitionStats,
    enumerate_partitions,
    stats,
    wsum_corollary1_lhs,
    wsum_corollary2_lhs,
    wsum_largest,
    wsum_smallest,
    wsum_theorem4_lhs,
    wsum_window,
)
from .ring import PolyTU, poly_eval, poly_mul, ring_inverse
from .series import TruncatedSeries, poch_finite, poch_infinite, s_add, s_mul, s_reciprocal, s_shift
from .seqexpr import eval_at, materialize, parse

__version__ = "0.1.0"
