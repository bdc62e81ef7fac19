"""Both sides of every identity, and structured comparison reports.

Series sides are expanded modulo ``q^(N+1)`` from q-Pochhammer products;
partition sides come from brute-force enumeration and divisor sides from
divisor loops.  :func:`check_identity` pairs them up and compares each
``n = 1..N`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import arith, partition
from .arith import SeqValues
from .errors import FineSpecInvalid, InvalidParameter, NotAUnit, SequenceTooShort
from .partition import enumerate_partitions
from .ring import PolyTU, as_rational, is_symbolic, one_like, ring_from_json, ring_str, ring_to_json, zero_like
from .series import (
    TruncatedSeries,
    poch_finite,
    poch_finite_reciprocal,
    poch_infinite,
    poch_infinite_reciprocal,
    s_reciprocal,
)

IDENTITIES = ("thm1", "thm2", "thm3", "thm4", "cor1", "cor2", "ex1", "ex2", "ex3")


@dataclass
class Row:
    n: int
    lhs: object
    rhs: object
    passed: bool

    def to_json(self) -> dict:
        return {"n": self.n, "lhs": ring_to_json(self.lhs), "rhs": ring_to_json(self.rhs), "pass": self.passed}


@dataclass
class IdentityReport:
    identity: str
    mode: str
    params: Dict[str, object]
    rows: List[Row] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(r.passed for r in self.rows)

    def first_failure(self) -> Optional[Row]:
        return next((r for r in self.rows if not r.passed), None)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "mode": self.mode,
            "params": self.params,
            "rows": [r.to_json() for r in self.rows],
            "overall": self.overall,
        }

    def table(self) -> str:
        lines = [f"{self.identity} ({self.mode}) " + " ".join(f"{k}={v}" for k, v in self.params.items())]
        for r in self.rows:
            mark = "ok" if r.passed else "FAIL"
            lines.append(f"{r.n:>4}  {mark:<4}  lhs = {ring_str(r.lhs)}  rhs = {ring_str(r.rhs)}")
        lines.append("overall: " + ("PASS" if self.overall else "FAIL"))
        return "\n".join(lines)


def _compare(identity, mode, params, pairs, perturb=None) -> IdentityReport:
    rep = IdentityReport(identity, mode, params)
    for n, lhs, rhs in pairs:
        if perturb is not None:
            rhs = perturb(n, rhs)
        rep.rows.append(Row(n, lhs, rhs, lhs == rhs))
    return rep


# -- series sides ------------------------------------------------------------

def _accumulate(N: int, terms) -> TruncatedSeries:
    out = None
    for coeff, series in terms:
        if coeff == 0:
            continue
        s = series.scale(coeff)
        out = s if out is None else out + s
    if out is None:
        return TruncatedSeries.constant(Fraction(0), N)
    return out


@lru_cache(maxsize=4096)
def theorem1_term(n: int, t, u, N: int) -> TruncatedSeries:
    """``t u q^n ((1-u) t q^(n+1))_inf / (t q^n)_inf`` modulo ``q^(N+1)``."""
    num = poch_infinite((1 - u) * t, n + 1, N)
    den = poch_infinite_reciprocal(t, n, N)
    return (num * den).shift(n).scale(t * u)


@lru_cache(maxsize=4096)
def theorem2_term(n: int, t, u, N: int) -> TruncatedSeries:
    """``t u q^n ((1-u) t q)_(n-1) / (t q)_n`` modulo ``q^(N+1)``."""
    num = poch_finite((1 - u) * t, 1, n - 1, N)
    den = poch_finite_reciprocal(t, 1, n, N)
    return (num * den).shift(n).scale(t * u)


@lru_cache(maxsize=4096)
def theorem3_term(n: int, t, u, N: int) -> TruncatedSeries:
    """``sum_{i>=0} t u q^(n+i) ((1-u) t q^(i+1))_(n-1) / (t q^(i+1))_n``."""
    pieces = []
    for i in range(0, N - n + 1):
        num = poch_finite((1 - u) * t, i + 1, n - 1, N)
        den = poch_finite_reciprocal(t, i + 1, n, N)
        pieces.append((1, (num * den).shift(n + i)))
    return _accumulate(N, pieces).scale(t * u)


def _lhs(term, a: SeqValues, t, u, N: int) -> TruncatedSeries:
    # outer terms whose leading power q^n exceeds q^N vanish
    return _accumulate(N, ((a[n], term(n, t, u, N)) for n in range(1, N + 1)))


def lhs_theorem1_series(a: SeqValues, t, u, N: int) -> TruncatedSeries:
    return _lhs(theorem1_term, a, t, u, N)


def lhs_theorem2_series(a: SeqValues, t, u, N: int) -> TruncatedSeries:
    return _lhs(theorem2_term, a, t, u, N)


def lhs_theorem3_series(a: SeqValues, t, u, N: int) -> TruncatedSeries:
    return _lhs(theorem3_term, a, t, u, N)


# -- Fine's product theorem ----------------------------------------------------

class FineSpec:
    """Factors ``psi_j(q) = sum_k C_j(k) q^k`` for ``j = 1..J``; ``psi_j = 1`` beyond.

    ``table[j-1]`` lists ``C_j(0), C_j(1), ..., C_j(K_j)``; coefficients past
    ``K_j`` are zero.
    """

    def __init__(self, table: Sequence[Sequence], tail_constant=1):
        if any(len(row) == 0 for row in table):
            raise FineSpecInvalid("every factor needs at least its constant term C_j(0)")
        if tail_constant != 1:
            raise FineSpecInvalid(f"factors beyond J must be 1, got constant {tail_constant}")
        self.table = tuple(tuple(row) for row in table)

    @property
    def J(self) -> int:
        return len(self.table)

    def C(self, j: int, k: int):
        if j > self.J:
            return Fraction(int(k == 0))
        row = self.table[j - 1]
        return row[k] if k < len(row) else Fraction(0)

    @classmethod
    def from_rule(cls, J: int, K: int, rule: Callable[[int, int], object]) -> "FineSpec":
        return cls([[rule(j, k) for k in range(K + 1)] for j in range(1, J + 1)])

    def to_json(self) -> dict:
        return {"table": [[ring_to_json(c) for c in row] for row in self.table]}

    @classmethod
    def from_json(cls, obj) -> "FineSpec":
        if "table" not in obj:
            raise FineSpecInvalid("missing 'table'")
        tail = obj.get("tail_constant", {"num": "1", "den": "1"})
        return cls([[ring_from_json(c) for c in row] for row in obj["table"]], ring_from_json(tail))


def _sample(spec: FineSpec):
    for row in spec.table:
        for c in row:
            return c
    return Fraction(1)


def fine_product(spec: FineSpec, N: int) -> TruncatedSeries:
    """``prod_{j>=1} psi_j(q^j)`` modulo ``q^(N+1)``."""
    one = one_like(_sample(spec))
    out = TruncatedSeries.constant(one, N)
    for j in range(1, spec.J + 1):
        row = spec.table[j - 1]
        coeffs = [zero_like(one)] * (N + 1)
        for k, c in enumerate(row):
            if j * k > N:
                break
            coeffs[j * k] = c
        out = out * TruncatedSeries(coeffs, N)
    return out


def fine_partition_sum(spec: FineSpec, n: int):
    """``sum over partitions of n of C_1(k_1) C_2(k_2) ...`` by enumeration."""
    one = one_like(_sample(spec))
    if n == 0:
        total = one
        for j in range(1, spec.J + 1):
            total = total * spec.C(j, 0)
        return total
    total = zero_like(one)
    for p in enumerate_partitions(n):
        w = one
        for j in range(1, max(n, spec.J) + 1):
            w = w * spec.C(j, p.k_(j))
            if w == 0:
                break
        total = total + w
    return total


def fine_check(spec: FineSpec, N: int, perturb=None) -> IdentityReport:
    prod = fine_product(spec, N)
    pairs = ((n, prod[n], fine_partition_sum(spec, n)) for n in range(0, N + 1))
    mode = "symbolic" if is_symbolic(*(c for row in spec.table for c in row)) else "evaluated"
    return _compare("fine", mode, {"J": spec.J, "N": N}, pairs, perturb)


# -- Heine's transformation --------------------------------------------------

Monomial = Tuple[Fraction, int]


def _mono(x) -> Monomial:
    alpha, e = x
    alpha = as_rational(alpha) if not isinstance(alpha, PolyTU) else alpha
    if e < 0 and alpha != 0:
        raise InvalidParameter(f"monomial exponent must be nonnegative, got {e}")
    return alpha, int(e)


def _poch(x: Monomial, n: int, N: int) -> TruncatedSeries:
    alpha, e = x
    if alpha == 0:
        return TruncatedSeries.constant(Fraction(1), N)
    return poch_finite(alpha, e, n, N)


def _poch_inf(x: Monomial, N: int) -> TruncatedSeries:
    alpha, e = x
    if alpha == 0:
        return TruncatedSeries.constant(Fraction(1), N)
    if e < 1:
        raise InvalidParameter("infinite product (x)_inf needs x = alpha q^e with e >= 1")
    return poch_infinite(alpha, e, N)


def _recip(s: TruncatedSeries, what: str) -> TruncatedSeries:
    try:
        return s_reciprocal(s)
    except NotAUnit:
        raise InvalidParameter(f"{what} has a non-unit constant term") from None


def _terms_needed(x: Monomial, N: int, what: str) -> int:
    alpha, e = x
    if alpha == 0:
        return 0
    if e < 1:
        raise InvalidParameter(f"{what} must carry a positive power of q for the sum to be formal")
    return N // e


def heine_lhs(a, b, c, z, N: int) -> TruncatedSeries:
    """``sum_i (a)_i (b)_i z^i / ((q)_i (c)_i)`` modulo ``q^(N+1)``."""
    a, b, c, z = map(_mono, (a, b, c, z))
    out = TruncatedSeries.constant(Fraction(0), N)
    for i in range(_terms_needed(z, N, "z") + 1):
        num = _poch(a, i, N) * _poch(b, i, N)
        den = poch_finite_reciprocal(1, 1, i, N) * _recip(_poch(c, i, N), "(c)_i")
        zi = TruncatedSeries.monomial(z[0] ** i, z[1] * i, N)
        out = out + num * den * zi
    return out


def heine_rhs(a, b, c, z, N: int) -> TruncatedSeries:
    """``(c/b)_inf (bz)_inf / ((c)_inf (z)_inf) * sum_j (abz/c)_j (b)_j (c/b)^j / ((q)_j (bz)_j)``."""
    a, b, c, z = map(_mono, (a, b, c, z))
    if b[0] == 0:
        raise InvalidParameter("b must be nonzero")
    c_over_b = (c[0] / b[0], c[1] - b[1])
    bz = (b[0] * z[0], b[1] + z[1])
    if c[0] == 0:
        abz_c = None
    else:
        abz_c = _mono((a[0] * b[0] * z[0] / c[0], a[1] + b[1] + z[1] - c[1]))
    pre = _poch_inf(c_over_b, N) * _poch_inf(bz, N)
    pre = pre * _recip(_poch_inf(c, N), "(c)_inf") * _recip(_poch_inf(z, N), "(z)_inf")
    total = TruncatedSeries.constant(Fraction(0), N)
    for j in range(_terms_needed(c_over_b, N, "c/b") + 1):
        if abz_c is None:
            # c = 0 forces c/b = 0, so only j = 0 survives
            num = TruncatedSeries.constant(Fraction(1), N)
        else:
            num = _poch(abz_c, j, N) * _poch(b, j, N)
        den = poch_finite_reciprocal(1, 1, j, N) * _recip(_poch(bz, j, N), "(bz)_j")
        cbj = TruncatedSeries.monomial(c_over_b[0] ** j, c_over_b[1] * j, N)
        total = total + num * den * cbj
    return pre * total


def heine_check(a, b, c, z, N: int, perturb=None) -> IdentityReport:
    """Compare both sides of the transformation coefficient by coefficient.

    Each parameter is a monomial ``(alpha, e)`` meaning ``alpha * q^e``.
    """
    lhs = heine_lhs(a, b, c, z, N)
    rhs = heine_rhs(a, b, c, z, N)
    params = {
        name: f"{ring_str(_mono(v)[0])},{_mono(v)[1]}" for name, v in zip("abcz", (a, b, c, z))
    }
    params["N"] = N
    return _compare("heine", "evaluated", params, ((m, lhs[m], rhs[m]) for m in range(N + 1)), perturb)


def heine_proof_instance(t, n: int) -> Tuple[Monomial, Monomial, Monomial, Monomial]:
    """Parameters used in the proof of the divisor identity: a=tq, b=q^n, c=tq^(n+1), z=q."""
    t = as_rational(t)
    return (t, 1), (Fraction(1), n), (t, n + 1), (Fraction(1), 1)


# -- dispatch ----------------------------------------------------------------

def _sequence(a, N: int) -> SeqValues:
    from .seqexpr import materialize

    if a is None:
        a = "n"
    if isinstance(a, str):
        return materialize(a, N)
    if callable(a) and not isinstance(a, SeqValues):
        return SeqValues.from_function(a, N)
    if not isinstance(a, SeqValues):
        a = SeqValues(a)
    if len(a) < N:
        raise SequenceTooShort(f"sequence has {len(a)} terms, {N} needed")
    return a


def _param(x, default):
    if x is None:
        return Fraction(default)
    if isinstance(x, PolyTU):
        return x
    return as_rational(x)


def check_identity(
    which: str,
    a=None,
    t=None,
    u=None,
    mode: str = "evaluated",
    N: int = 20,
    perturb: Callable[[int, object], object] | None = None,
) -> IdentityReport:
    """Run one identity for ``n = 1..N`` and report every comparison.

    ``a`` may be a :class:`SeqValues`, an expression string in ``n``, a
    callable or ``None`` (meaning ``a_n = n``).  In symbolic mode ``t`` and
    ``u`` are the indeterminates and any given values are ignored.  ``u`` is
    unused by the divisor-side identities; ``ex1``-``ex3`` fix their own
    sequence and ``t = -1``.  ``perturb(n, rhs)`` is a test hook that may
    alter each right-hand value before comparison.
    """
    if which not in IDENTITIES:
        raise InvalidParameter(f"unknown identity {which!r}; choose from {', '.join(IDENTITIES)}")
    if mode not in ("evaluated", "symbolic"):
        raise InvalidParameter(f"unknown mode {mode!r}")
    if N < 1:
        raise InvalidParameter("N must be at least 1")

    if which.startswith("ex"):
        seq_text = {"ex1": "n", "ex2": "n^2", "ex3": "(1-(-1)^n)/2"}[which]
        a = _sequence(seq_text, N)
        t = Fraction(-1)
        if which == "ex3":
            pairs = ((n, partition.wsum_corollary2_lhs(n, a, t), arith.rhs_example3(n)) for n in range(1, N + 1))
        else:
            closed = arith.rhs_example1 if which == "ex1" else arith.rhs_example2
            pairs = ((n, partition.wsum_theorem4_lhs(n, a, t), closed(n)) for n in range(1, N + 1))
        return _compare(which, "evaluated", {"t": "-1", "seq": seq_text, "N": N}, pairs, perturb)

    if mode == "symbolic":
        t, u = PolyTU.t(), PolyTU.u()
        tu_params = {"t": "symbolic", "u": "symbolic"}
    else:
        t, u = _param(t, 2), _param(u, 3)
        tu_params = {"t": str(t), "u": str(u)}
    a = _sequence(a, N)
    params = {**tu_params, "seq": a.description or "values", "N": N}

    if which in ("thm1", "thm2", "thm3"):
        lhs_fn, rhs_fn = {
            "thm1": (lhs_theorem1_series, partition.wsum_smallest),
            "thm2": (lhs_theorem2_series, partition.wsum_largest),
            "thm3": (lhs_theorem3_series, partition.wsum_window),
        }[which]
        series = lhs_fn(a, t, u, N)
        pairs = ((n, series[n], rhs_fn(n, a, t, u)) for n in range(1, N + 1))
        return _compare(which, mode, params, pairs, perturb)

    if t == 0 or t == 1:
        raise InvalidParameter("t must differ from 0 and 1 (t not in {0, 1}) for " + which)
    params.pop("u")
    if which == "thm4":
        pairs = ((n, partition.wsum_theorem4_lhs(n, a, t), arith.rhs_theorem4(n, a, t)) for n in range(1, N + 1))
    elif which == "cor1":
        pairs = ((n, partition.wsum_corollary1_lhs(n, a, t), arith.rhs_corollary1(n, a, t)) for n in range(1, N + 1))
    else:
        b = arith.divisor_transform(a, N)
        pairs = ((n, partition.wsum_corollary2_lhs(n, a, t), b[n]) for n in range(1, N + 1))
    return _compare(which, mode, params, pairs, perturb)


def expand_side(which: str, side: str, a=None, t=None, u=None, mode: str = "evaluated", N: int = 20) -> List[Tuple[int, object]]:
    """Per-``n`` values of one side of the thm1/thm2/thm3 identities."""
    if which not in ("thm1", "thm2", "thm3"):
        raise InvalidParameter("expand supports thm1, thm2 and thm3")
    if side not in ("lhs", "rhs"):
        raise InvalidParameter("side must be 'lhs' or 'rhs'")
    if mode == "symbolic":
        t, u = PolyTU.t(), PolyTU.u()
    else:
        t, u = _param(t, 2), _param(u, 3)
    a = _sequence(a, N)
    if side == "lhs":
        fn = {"thm1": lhs_theorem1_series, "thm2": lhs_theorem2_series, "thm3": lhs_theorem3_series}[which]
        s = fn(a, t, u, N)
        return [(n, s[n]) for n in range(1, N + 1)]
    fn = {"thm1": partition.wsum_smallest, "thm2": partition.wsum_largest, "thm3": partition.wsum_window}[which]
    return [(n, fn(n, a, t, u)) for n in range(1, N + 1)]
