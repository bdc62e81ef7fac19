"""Partitions as multiplicity vectors, their statistics, and weighted sums.

Every weighted sum here is a brute-force sum over all partitions of ``n``.
Since each weight depends on a partition only through its statistics
``(k, Q, s, l)``, the sums run over a cached histogram of those statistics
instead of over the partitions one by one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Tuple

from .arith import SeqValues
from .errors import InvalidParameter
from .ring import one_like, ring_inverse, zero_like


@dataclass(frozen=True)
class PartitionStats:
    k: int  # number of parts
    Q: int  # number of distinct parts
    s: int  # smallest part
    l: int  # largest part

    def to_json(self) -> dict:
        return {"k": self.k, "Q": self.Q, "s": self.s, "l": self.l}


@dataclass(frozen=True)
class Partition:
    """Partition of ``n`` with ``mult[j-1]`` copies of the part ``j``."""

    n: int
    mult: Tuple[int, ...]

    def __post_init__(self):
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be nonnegative")
        if sum((j + 1) * m for j, m in enumerate(self.mult)) != self.n:
            raise ValueError(f"multiplicities {self.mult} do not sum to {self.n}")
        if self.n < 1:
            raise ValueError("n must be positive")

    def k_(self, j: int) -> int:
        """Multiplicity of part ``j`` (1-based); zero past the stored vector."""
        return self.mult[j - 1] if 1 <= j <= len(self.mult) else 0

    def parts(self) -> Tuple[int, ...]:
        """Parts in non-increasing order."""
        out = []
        for j in range(len(self.mult), 0, -1):
            out.extend([j] * self.mult[j - 1])
        return tuple(out)

    def stats(self) -> PartitionStats:
        return stats(self)

    def __str__(self):
        return "+".join(map(str, self.parts()))

    def to_json(self) -> dict:
        return {"n": self.n, "mult": list(self.mult)}

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        parts = list(parts)
        n = sum(parts)
        mult = [0] * (max(parts) if parts else 0)
        for p in parts:
            mult[p - 1] += 1
        return cls(n, tuple(mult))


def stats(p: Partition) -> PartitionStats:
    used = [j for j, m in enumerate(p.mult, start=1) if m > 0]
    return PartitionStats(k=sum(p.mult), Q=len(used), s=used[0], l=used[-1])


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in descending lexicographic order.

    Order is by the non-increasing part sequence, so ``(n)`` comes first and
    ``(1, ..., 1)`` last.  The multiplicity vector has length ``n``.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    # standard successor rule on non-increasing part lists
    parts = [n]
    while True:
        mult = [0] * n
        for x in parts:
            mult[x - 1] += 1
        yield Partition(n, tuple(mult))
        # strip trailing 1s, decrement the last part > 1, refill greedily
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        x = parts.pop() - 1
        rem = ones + 1
        parts.append(x)
        while rem > x:
            parts.append(x)
            rem -= x
        if rem:
            parts.append(rem)


def partition_count(n: int) -> int:
    return sum(stats_histogram(n).values()) if n >= 1 else int(n == 0)


@lru_cache(maxsize=None)
def _histogram(n: int) -> Tuple[Tuple[PartitionStats, int], ...]:
    hist = Counter(stats(p) for p in enumerate_partitions(n))
    return tuple(sorted(hist.items(), key=lambda kv: (kv[0].s, kv[0].l, kv[0].k, kv[0].Q)))


def stats_histogram(n: int) -> Dict[PartitionStats, int]:
    """Number of partitions of ``n`` with each combination of statistics."""
    return dict(_histogram(n))


class _Powers:
    """Memoised nonnegative powers of one ring element."""

    def __init__(self, x):
        self.x = x
        self.cache = [one_like(x)]

    def __getitem__(self, e: int):
        c = self.cache
        while len(c) <= e:
            c.append(c[-1] * self.x)
        return c[e]


def _weighted(n: int, t, u, inner):
    tp, up = _Powers(t), _Powers(u)
    total = zero_like(t) + zero_like(u)
    for st, cnt in _histogram(n):
        w = inner(st)
        if w == 0:
            continue
        total = total + tp[st.k] * up[st.Q] * w * cnt
    return total


def wsum_smallest(n: int, a: SeqValues, t, u):
    """Sum over partitions of ``n`` of ``t^k u^Q a_s``."""
    return _weighted(n, t, u, lambda st: a[st.s])


def wsum_largest(n: int, a: SeqValues, t, u):
    """Sum over partitions of ``n`` of ``t^k u^Q a_l``."""
    return _weighted(n, t, u, lambda st: a[st.l])


def window_sum(a: SeqValues, st: PartitionStats):
    """``a_{l-s+1} + ... + a_l``: the ``s`` terms ending at the largest part."""
    lo = st.l - st.s + 1
    total = a[lo]
    for i in range(lo + 1, st.l + 1):
        total = total + a[i]
    return total


def wsum_window(n: int, a: SeqValues, t, u):
    """Sum over partitions of ``n`` of ``t^k u^Q (a_{l-s+1} + ... + a_l)``."""
    return _weighted(n, t, u, lambda st: window_sum(a, st))


def check_t(t) -> None:
    if t == 0 or t == 1:
        raise InvalidParameter("t must differ from 0 and 1 (t not in {0, 1})")


def _divisor_weighted(n: int, t, inner):
    # t^(k-1) ((t-1)/t)^(Q-1); the second factor is Laurent in t
    check_t(t)
    w = (t - 1) * ring_inverse(t)
    tp, wp = _Powers(t), _Powers(w)
    total = zero_like(t)
    for st, cnt in _histogram(n):
        x = inner(st)
        if x == 0:
            continue
        total = total + tp[st.k - 1] * wp[st.Q - 1] * x * cnt
    return total


def wsum_theorem4_lhs(n: int, a: SeqValues, t):
    """Sum over partitions of ``t^(k-1) ((t-1)/t)^(Q-1) (a_{l-s+1}+...+a_l)``."""
    return _divisor_weighted(n, t, lambda st: window_sum(a, st))


def wsum_corollary1_lhs(n: int, a: SeqValues, t):
    """As :func:`wsum_theorem4_lhs` with each ``a_i`` weighted by ``t^i``."""
    check_t(t)
    tp = _Powers(t)

    def inner(st):
        total = zero_like(t)
        for i in range(st.l - st.s + 1, st.l + 1):
            total = total + tp[i] * a[i]
        return total

    return _divisor_weighted(n, t, inner)


def wsum_corollary2_lhs(n: int, a: SeqValues, t):
    """Window of differences ``a_i - t a_{i-1}``, with ``a_0 = 0``.

    The result does not depend on ``t``; it equals the divisor sum of ``a``.
    """

    def inner(st):
        total = zero_like(t)
        for i in range(st.l - st.s + 1, st.l + 1):
            total = total + a[i] - t * a[i - 1]
        return total

    return _divisor_weighted(n, t, inner)


def wsum_smallest_part_signed(n: int) -> int:
    """``sum (-1)^(k-1) 2^(Q-1) s`` over partitions of ``n``."""
    return sum((-1) ** (st.k - 1) * 2 ** (st.Q - 1) * st.s * cnt for st, cnt in _histogram(n))
