"""Exact coefficient rings.

Two coefficient rings are supported and every other module is written
against both:

* evaluated mode uses exact rationals (``fractions.Fraction``; plain ``int``
  values are accepted wherever a rational is);
* symbolic mode uses :class:`PolyTU`, Laurent polynomials in ``t`` and
  ordinary polynomials in ``u`` with rational coefficients.

The shared contract is the usual numeric protocol (``+``, ``-``, ``*``,
``==``, integer ``**``) plus :func:`ring_inverse`, which is defined exactly
on units, and :func:`zero_like` / :func:`one_like`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .errors import EvalAtZero, NotAUnit

Key = Tuple[int, int]
Scalar = Union[int, Fraction]


def _norm(c: Scalar) -> Scalar:
    # integral values are kept as int: much faster than Fraction arithmetic
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c.numerator, c.denominator)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not an exact rational: {c!r}")


def as_rational(x) -> Fraction:
    """Coerce an ``int``/``Fraction``/``"p/q"`` string to ``Fraction``."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``. Decimals are rejected on purpose."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational of the form p or p/q: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


class PolyTU:
    """Laurent polynomial in ``t``, polynomial in ``u``, rational coefficients.

    Terms are stored as a map ``(e_t, e_u) -> coefficient`` with no zero
    coefficients, so structural equality is mathematical equality.  Instances
    are immutable.

    >>> t, u = PolyTU.t(), PolyTU.u()
    >>> (t * u) * (t * u) == t**2 * u**2
    True
    >>> str((t - 1) * t**-1)
    '1 - t^-1'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Scalar] | Iterable[Tuple[Key, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Key, Scalar] = {}
        for (et, eu), c in items:
            if type(et) is not int or type(eu) is not int:
                raise TypeError("exponents must be integers")
            if eu < 0:
                raise ValueError("u-exponent must be nonnegative")
            key = (et, eu)
            acc[key] = acc.get(key, 0) + _norm(c)
        self._terms = {k: _norm(v) for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Key, Scalar]) -> "PolyTU":
        # trusted constructor: terms already normalised and zero-free
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "PolyTU":
        c = _norm(c)
        return cls._raw({(0, 0): c} if c != 0 else {})

    @classmethod
    def monomial(cls, c: Scalar, et: int = 0, eu: int = 0) -> "PolyTU":
        return cls({(et, eu): c})

    @classmethod
    def t(cls) -> "PolyTU":
        return cls._raw({(1, 0): 1})

    @classmethod
    def u(cls) -> "PolyTU":
        return cls._raw({(0, 1): 1})

    @classmethod
    def zero(cls) -> "PolyTU":
        return cls._raw({})

    @classmethod
    def one(cls) -> "PolyTU":
        return cls._raw({(0, 0): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Key, Fraction]:
        """Copy of the term map with ``Fraction`` coefficients, canonical order."""
        return {k: Fraction(self._terms[k]) for k in sorted(self._terms)}

    def __iter__(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, et: int, eu: int = 0) -> Fraction:
        return Fraction(self._terms.get((et, eu), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        if len(self._terms) != 1:
            return False
        ((_, eu),) = self._terms
        return eu == 0

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def min_t_exponent(self) -> int:
        return min((et for et, _ in self._terms), default=0)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "PolyTU | None":
        if isinstance(other, PolyTU):
            return other
        if isinstance(other, Rational):
            return PolyTU.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        out = dict(self._terms)
        for k, c in o._terms.items():
            v = out.get(k, 0) + c
            if v == 0:
                out.pop(k, None)
            else:
                out[k] = _norm(v)
        return PolyTU._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyTU._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._terms, o._terms
        if not a or not b:
            return PolyTU._raw({})
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Key, Scalar] = {}
        get = out.get
        for (bt, bu), bc in b.items():
            for (at, au), ac in a.items():
                k = (at + bt, au + bu)
                out[k] = get(k, 0) + ac * bc
        return PolyTU._raw({k: _norm(v) for k, v in out.items() if v != 0})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if type(e) is not int:
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = PolyTU.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "PolyTU":
        """Inverse of a unit ``c * t^a``; anything else raises :class:`NotAUnit`."""
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a nonzero monomial in t alone")
        ((et, _), c), = self._terms.items()
        return PolyTU._raw({(-et, 0): _norm(Fraction(1) / c)})

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get((0, 0), 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation and display -------------------------------------------

    def eval(self, t_val, u_val=0) -> Fraction:
        """Substitute rational values for ``t`` and ``u``."""
        t_val = as_rational(t_val)
        u_val = as_rational(u_val)
        if t_val == 0 and self.min_t_exponent() < 0:
            raise EvalAtZero(f"cannot evaluate {self} at t = 0")
        total = Fraction(0)
        for (et, eu), c in self._terms.items():
            total += c * t_val**et * u_val**eu
        return total

    def __repr__(self):
        return f"PolyTU({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for et, eu in sorted(self._terms, key=lambda k: (-k[0], -k[1])):
            c = Fraction(self._terms[et, eu])
            mono = []
            if et:
                mono.append("t" if et == 1 else f"t^{et}")
            if eu:
                mono.append("u" if eu == 1 else f"u^{eu}")
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = "*".join(mono)
            else:
                body = "*".join([f"({mag})" if mag.denominator != 1 else str(mag), *mono])
            pieces.append((sign, body))
        head_sign, head = pieces[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def poly_mul(p: PolyTU, q: PolyTU) -> PolyTU:
    return p * q


def poly_eval(p: PolyTU, t_val, u_val) -> Fraction:
    return p.eval(t_val, u_val)


def ring_inverse(x):
    """Exact inverse of a unit of either coefficient ring.

    Raises :class:`NotAUnit` for zero rationals and for polynomials that are
    not a single monomial ``c * t^a``.
    """
    if isinstance(x, PolyTU):
        return x.inverse()
    if isinstance(x, Rational):
        if x == 0:
            raise NotAUnit("zero has no inverse")
        return Fraction(1) / Fraction(x.numerator, x.denominator)
    raise TypeError(f"unsupported ring element: {x!r}")


def is_unit(x) -> bool:
    if isinstance(x, PolyTU):
        return x.is_unit()
    return x != 0


def zero_like(x):
    return PolyTU.zero() if isinstance(x, PolyTU) else Fraction(0)


def one_like(x):
    return PolyTU.one() if isinstance(x, PolyTU) else Fraction(1)


def is_symbolic(*xs) -> bool:
    return any(isinstance(x, PolyTU) for x in xs)


# -- JSON forms ------------------------------------------------------------

def rational_to_json(x) -> dict:
    x = as_rational(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(obj: Mapping) -> Fraction:
    den = int(obj["den"])
    if den <= 0:
        raise ValueError("denominator must be positive")
    return Fraction(int(obj["num"]), den)


def poly_to_json(p: PolyTU) -> list:
    return [
        {"et": et, "eu": eu, "num": str(c.numerator), "den": str(c.denominator)}
        for (et, eu), c in p.terms.items()
    ]


def poly_from_json(arr: list) -> PolyTU:
    return PolyTU({(int(d["et"]), int(d["eu"])): rational_from_json(d) for d in arr})


def ring_to_json(x):
    """Rationals serialise as an object, polynomials as a term array."""
    if isinstance(x, PolyTU):
        return poly_to_json(x)
    return rational_to_json(x)


def ring_from_json(obj):
    if isinstance(obj, list):
        return poly_from_json(obj)
    if isinstance(obj, Mapping):
        return rational_from_json(obj)
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        return as_rational(obj if isinstance(obj, str) else Fraction(obj))
    raise ValueError(f"not a ring element: {obj!r}")


def ring_str(x) -> str:
    return str(x) if isinstance(x, PolyTU) else str(as_rational(x))
