"""Truncated formal power series in ``q`` and q-Pochhammer builders.

A :class:`TruncatedSeries` of order ``N`` holds ``c_0 .. c_N`` and represents
its value modulo ``q^(N+1)``.  Coefficients come from either ring in
:mod:`partition_identities.ring`.  Operands of a binary operation must share
the same order; nothing is promoted silently.
"""

from __future__ import annotations

from typing import Sequence

from .errors import NotAUnit, OrderMismatch
from .ring import is_unit, one_like, ring_from_json, ring_inverse, ring_to_json, ring_str, zero_like


class TruncatedSeries:
    """Coefficients of ``q^0 .. q^order``; immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None, zero=None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("cannot infer the order of an empty series")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        if len(coeffs) < order + 1:
            if zero is None:
                zero = zero_like(coeffs[0]) if coeffs else 0
            coeffs.extend([zero] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order, zero=zero_like(c))

    @classmethod
    def monomial(cls, c, exponent: int, order: int) -> "TruncatedSeries":
        z = zero_like(c)
        coeffs = [z] * (order + 1)
        if 0 <= exponent <= order:
            coeffs[exponent] = c
        return cls(coeffs, order)

    def __getitem__(self, m):
        return self.coeffs[m]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return s_add(self, other)
        return TruncatedSeries([self.coeffs[0] + other, *self.coeffs[1:]], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return s_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries([c * x for x in self.coeffs], self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def reciprocal(self) -> "TruncatedSeries":
        return s_reciprocal(self)

    def shift(self, d: int) -> "TruncatedSeries":
        return s_shift(self, d)

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={list(self.coeffs)!r})"

    def __str__(self):
        parts = []
        for m, c in enumerate(self.coeffs):
            if c == 0:
                continue
            qm = "" if m == 0 else ("q" if m == 1 else f"q^{m}")
            cs = ring_str(c)
            if not qm:
                parts.append(cs)
            elif c == 1:
                parts.append(qm)
            else:
                parts.append(f"({cs})*{qm}")
        return (" + ".join(parts) or "0") + f" + O(q^{self.order + 1})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [ring_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "TruncatedSeries":
        coeffs = [ring_from_json(c) for c in obj["coeffs"]]
        order = int(obj["order"])
        if len(coeffs) != order + 1:
            raise ValueError("coeffs length must equal order + 1")
        return cls(coeffs, order)


def s_add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    x._check(y)
    return TruncatedSeries([a + b for a, b in zip(x.coeffs, y.coeffs)], x.order)


def s_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at ``q^N``."""
    x._check(y)
    N = x.order
    xc, yc = x.coeffs, y.coeffs
    # skip zero coefficients: most series built here are sparse
    xnz = [(i, c) for i, c in enumerate(xc) if c != 0]
    ynz = [(j, c) for j, c in enumerate(yc) if c != 0]
    z = zero_like(xc[0])
    out = [z] * (N + 1)
    for i, a in xnz:
        for j, b in ynz:
            if i + j > N:
                break
            out[i + j] = out[i + j] + a * b
    return TruncatedSeries(out, N)


def s_reciprocal(x: TruncatedSeries) -> TruncatedSeries:
    """Inverse modulo ``q^(N+1)`` via the linear recurrence.

    ``y[0] = 1/x[0]`` and ``y[m] = -(1/x[0]) * sum(x[i] * y[m-i], i=1..m)``.
    """
    x0 = x.coeffs[0]
    if not is_unit(x0):
        raise NotAUnit(f"constant term {ring_str(x0)} is not a unit")
    inv0 = ring_inverse(x0)
    N = x.order
    xnz = [(i, c) for i, c in enumerate(x.coeffs) if i and c != 0]
    y = [inv0]
    for m in range(1, N + 1):
        acc = zero_like(x0)
        for i, c in xnz:
            if i > m:
                break
            acc = acc + c * y[m - i]
        y.append(-inv0 * acc)
    return TruncatedSeries(y, N)


def s_shift(x: TruncatedSeries, d: int) -> TruncatedSeries:
    """Multiply by ``q^d``; coefficients pushed past ``q^N`` are dropped."""
    if d < 0:
        raise ValueError("shift must be nonnegative")
    if d == 0:
        return x
    z = zero_like(x.coeffs[0])
    return TruncatedSeries([z] * d + list(x.coeffs[: max(0, x.order + 1 - d)]), x.order)


def mul_one_minus(x: TruncatedSeries, c, m: int) -> TruncatedSeries:
    """``x * (1 - c q^m)`` in O(N) ring operations."""
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    xc = x.coeffs
    if m == 0:
        return x.scale(1 - c)
    out = list(xc)
    for k in range(m, x.order + 1):
        if xc[k - m] != 0:
            out[k] = out[k] - c * xc[k - m]
    return TruncatedSeries(out, x.order)


def div_one_minus(x: TruncatedSeries, c, m: int) -> TruncatedSeries:
    """``x / (1 - c q^m)`` for ``m >= 1``: the geometric series recurrence."""
    if m < 1:
        raise ValueError("exponent must be positive")
    out = list(x.coeffs)
    for k in range(m, x.order + 1):
        if out[k - m] != 0:
            out[k] = out[k] + c * out[k - m]
    return TruncatedSeries(out, x.order)


def poch_finite(c, m: int, n: int, N: int) -> TruncatedSeries:
    """``(c q^m; q)_n = prod_{i=0}^{n-1} (1 - c q^(m+i))`` modulo ``q^(N+1)``.

    ``m = 0`` is accepted (the first factor is then the constant ``1 - c``).
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if m < 0:
        raise ValueError("exponent offset must be nonnegative")
    s = TruncatedSeries.constant(one_like(c), N)
    if c == 0:
        return s
    for i in range(n):
        if m + i > N:
            break
        s = mul_one_minus(s, c, m + i)
    return s


def poch_infinite(c, m: int, N: int) -> TruncatedSeries:
    """``(c q^m; q)_inf`` modulo ``q^(N+1)``; only factors up to ``q^N`` matter."""
    if m < 1:
        raise ValueError("exponent offset must be at least 1")
    return poch_finite(c, m, max(0, N - m + 1), N)


def poch_finite_reciprocal(c, m: int, n: int, N: int) -> TruncatedSeries:
    """``1 / (c q^m; q)_n`` for ``m >= 1`` as a product of geometric series.

    Agrees with ``s_reciprocal(poch_finite(c, m, n, N))`` but costs O(nN)
    instead of O(N^2) ring products per call.
    """
    if m < 1:
        raise ValueError("exponent offset must be at least 1")
    s = TruncatedSeries.constant(one_like(c), N)
    if c == 0:
        return s
    for i in range(n):
        if m + i > N:
            break
        s = div_one_minus(s, c, m + i)
    return s


def poch_infinite_reciprocal(c, m: int, N: int) -> TruncatedSeries:
    return poch_finite_reciprocal(c, m, max(0, N - m + 1), N)
