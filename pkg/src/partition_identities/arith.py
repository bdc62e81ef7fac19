"""Divisor-side arithmetic: divisors, sigma, odd-divisor count, Moebius.

Also the divisor-sum transform and its Moebius inverse, and the divisor-side
expressions that the weighted partition sums are compared against.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence

from .errors import InvalidParameter, SequenceTooShort
from .ring import as_rational, one_like, ring_from_json, ring_inverse, ring_to_json, zero_like


class SeqValues:
    """Terms ``a_1 .. a_N`` of a sequence, indexed from 1.

    ``a[0]`` is always zero (appending a leading zero never changes any
    identity that starts at ``a_1``); indexing past ``N`` raises
    :class:`SequenceTooShort`.
    """

    __slots__ = ("values", "description")

    def __init__(self, values: Iterable, description: str = ""):
        self.values = tuple(values)
        self.description = description

    @classmethod
    def from_function(cls, f: Callable[[int], object], N: int, description: str = "") -> "SeqValues":
        return cls((f(n) for n in range(1, N + 1)), description)

    @classmethod
    def basis(cls, j: int, N: int) -> "SeqValues":
        """Unit sequence with ``a_j = 1`` and every other term zero."""
        return cls((Fraction(int(i == j)) for i in range(1, N + 1)), f"delta_{j}")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i: int):
        if i == 0:
            return zero_like(self.values[0]) if self.values else Fraction(0)
        if i < 0 or i > len(self.values):
            raise SequenceTooShort(f"term a_{i} requested but only a_1..a_{len(self.values)} known")
        return self.values[i - 1]

    def __eq__(self, other):
        if not isinstance(other, SeqValues):
            return NotImplemented
        return self.values == other.values

    def __repr__(self):
        return f"SeqValues({list(self.values)!r})"

    def map(self, f: Callable[[int, object], object]) -> "SeqValues":
        return SeqValues(f(i, x) for i, x in enumerate(self.values, start=1))

    def to_json(self) -> dict:
        return {"values": [ring_to_json(x) for x in self.values]}

    @classmethod
    def from_json(cls, obj) -> "SeqValues":
        return cls(ring_from_json(x) for x in obj["values"])


def divisors(n: int) -> List[int]:
    if n < 1:
        raise ValueError("n must be a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorize(n: int) -> Dict[int, int]:
    """Prime factorisation by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    out: Dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def sigma(k: int, n: int) -> int:
    """Sum of the ``k``-th powers of the divisors of ``n``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(d**k for d in divisors(n))


def tau_odd(n: int) -> int:
    """Number of odd divisors of ``n``."""
    return sum(1 for d in divisors(n) if d % 2)


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def _seq(a) -> SeqValues:
    return a if isinstance(a, SeqValues) else SeqValues(a)


def divisor_transform(a, N: int | None = None) -> SeqValues:
    """``b_n = sum_{d | n} a_d`` for ``n = 1..N``."""
    a = _seq(a)
    N = len(a) if N is None else N
    return SeqValues(_sum(a[d] for d in divisors(n)) for n in range(1, N + 1))


def mobius_inverse(b, N: int | None = None) -> SeqValues:
    """``a_n = sum_{d | n} mu(n/d) b_d``; undoes :func:`divisor_transform`."""
    b = _seq(b)
    N = len(b) if N is None else N
    out = []
    for n in range(1, N + 1):
        out.append(_sum(mobius(n // d) * b[d] for d in divisors(n) if mobius(n // d)))
    return SeqValues(out)


def _sum(xs):
    total = None
    for x in xs:
        total = x if total is None else total + x
    return Fraction(0) if total is None else total


def _check_t(t) -> None:
    if t == 0 or t == 1:
        raise InvalidParameter("t must differ from 0 and 1 (t not in {0, 1})")


def rhs_theorem4(n: int, a, t):
    """``sum_{d | n} t^d (a_1/t + a_2/t^2 + ... + a_d/t^d)``."""
    _check_t(t)
    a = _seq(a)
    tinv = ring_inverse(t)
    total = zero_like(t)
    for d in divisors(n):
        inner = zero_like(t)
        p = one_like(t)
        for i in range(1, d + 1):
            p = p * tinv
            inner = inner + a[i] * p
        total = total + t**d * inner
    return total


def rhs_corollary1(n: int, a, t):
    """``sum_{d | n} t^d (a_1 + ... + a_d)``."""
    _check_t(t)
    a = _seq(a)
    total = zero_like(t)
    for d in divisors(n):
        total = total + t**d * _sum(a[i] for i in range(1, d + 1))
    return total


def rhs_example1(n: int) -> Fraction:
    """``(sigma_1(n) + tau_odd(n)) / 2``."""
    return Fraction(sigma(1, n) + tau_odd(n), 2)


def rhs_example2(n: int) -> Fraction:
    """``(sigma_2(n) + sigma_1(n)) / 2``."""
    return Fraction(sigma(2, n) + sigma(1, n), 2)


def rhs_example3(n: int) -> Fraction:
    return Fraction(tau_odd(n))


def alternating_divisor_sum(n: int, power: int) -> Fraction:
    """``sum_{d | n} (-1)^d sum_{i=1}^d (-1)^i i^power``, summed directly."""
    return Fraction(sum((-1) ** d * sum((-1) ** i * i**power for i in range(1, d + 1)) for d in divisors(n)))


def rational_seq(values: Sequence) -> SeqValues:
    return SeqValues(as_rational(v) for v in values)
