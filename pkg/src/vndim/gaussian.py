"""Exact Gaussian rationals, i.e. elements of Q(i).

A value is stored as ``(re_num + im_num*i) / den`` with ``den > 0`` and
``gcd(re_num, im_num, den) == 1``, so structural equality is numeric
equality. Keeping a common denominator means one gcd per operation, which
matters inside elimination loops.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["GaussRational", "ZERO", "ONE", "I", "gaussian_gcd", "as_gauss"]


class GaussRational:
    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> GaussRational:
        if d < 0:
            a, b, d = -a, -b, -d
        obj = object.__new__(cls)
        obj._set(a, b, d)
        return obj

    # -- accessors -----------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def bit_size(self) -> int:
        """Storage size in bits; the pivot heuristic prefers small values."""
        return self._a.bit_length() + self._b.bit_length() + self._d.bit_length()

    def conjugate(self) -> GaussRational:
        return GaussRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Squared modulus ``|z|^2``."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def denominator(self) -> int:
        return self._d

    def scaled_numerators(self, d: int) -> tuple[int, int]:
        """Return ``(x, y)`` with ``self == (x + y*i)/d``; ``d`` must be a multiple of the denominator."""
        k, rem = divmod(d, self._d)
        if rem:
            raise ValueError(f"{d} is not a multiple of {self._d}")
        return self._a * k, self._b * k

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        o = as_gauss(other, strict=False)
        if o is NotImplemented:
            return o
        if self._d == o._d:
            return GaussRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self) -> GaussRational:
        return GaussRational._raw(-self._a, -self._b, self._d)

    def __sub__(self, other):
        o = as_gauss(other, strict=False)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = as_gauss(other, strict=False)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = as_gauss(other, strict=False)
        if o is NotImplemented:
            return o
        return GaussRational._raw(
            self._a * o._a - self._b * o._b, self._a * o._b + self._b * o._a, self._d * o._d
        )

    __rmul__ = __mul__

    def inverse(self) -> GaussRational:
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("GaussRational division by zero")
        # d / (a + b i) = d (a - b i) / n
        return GaussRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        o = as_gauss(other, strict=False)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = as_gauss(other, strict=False)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        o = as_gauss(other, strict=False)
        if o is NotImplemented:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.re, self.im)) if self._b else hash(self.re)
        return self._hash

    def __repr__(self) -> str:
        return f"GaussRational({self})"

    def __str__(self) -> str:
        return format_coeff(self)


ZERO = GaussRational()
ONE = GaussRational(1)
I = GaussRational(0, 1)


def as_gauss(x, strict: bool = True):
    """Coerce ints, Fractions, rational numbers and exact complex values."""
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Rational)):
        return GaussRational(x)
    if isinstance(x, complex) and x.real.is_integer() and x.imag.is_integer():
        return GaussRational(int(x.real), int(x.imag))
    if strict:
        raise TypeError(f"cannot use {x!r} as an exact Gaussian rational")
    return NotImplemented


# -- Gaussian integers -------------------------------------------------

def _round_div(n: int, d: int) -> int:
    # nearest integer to n/d, d > 0
    return (2 * n + d) // (2 * d)


def gaussian_gcd(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    """Euclidean gcd of two Gaussian integers given as ``(re, im)`` pairs.

    The result is normalized to the associate with ``re > 0, im >= 0``
    (or ``(0, 0)`` when both inputs vanish).
    """
    a, b = x
    c, d = y
    while c or d:
        n = c * c + d * d
        # (a + bi) / (c + di) = (a + bi)(c - di) / n
        qr = _round_div(a * c + b * d, n)
        qi = _round_div(b * c - a * d, n)
        a, b, c, d = c, d, a - (qr * c - qi * d), b - (qr * d + qi * c)
    return normalize_associate((a, b))


def normalize_associate(z: tuple[int, int]) -> tuple[int, int]:
    """Multiply by a unit so that ``re > 0`` and ``im >= 0``."""
    a, b = z
    for _ in range(4):
        if a > 0 and b >= 0:
            return a, b
        if a == 0 and b == 0:
            return 0, 0
        a, b = -b, a  # multiply by i
    raise AssertionError("unreachable")


# -- text form ---------------------------------------------------------

def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_coeff(c: GaussRational) -> str:
    """Render ``p/q``, ``p/q*i`` or ``p/q+r/s*i`` (integers drop ``/1``)."""
    re_, im_ = c.re, c.im
    if im_ == 0:
        return _fmt_rat(re_)
    if re_ == 0:
        return f"{_fmt_rat(im_)}*i"
    sign = "+" if im_ > 0 else "-"
    return f"{_fmt_rat(re_)}{sign}{_fmt_rat(abs(im_))}*i"


_RAT = r"\d+(?:/\d+)?"
COEFF_PATTERN = (
    rf"(?:(?P<re>{_RAT})(?:\s*(?P<imsign>[+-])\s*(?P<im>{_RAT})\s*\*\s*i)?"
    rf"|(?P<pim>{_RAT})\s*\*\s*i)"
)
_COEFF_RE = re.compile(rf"\s*(?P<sign>[+-])?\s*{COEFF_PATTERN}\s*$")


def coeff_from_match(m: re.Match) -> GaussRational:
    if m.group("pim") is not None:
        return GaussRational(0, Fraction(m.group("pim")))
    re_ = Fraction(m.group("re"))
    im_ = Fraction(0)
    if m.group("im") is not None:
        im_ = Fraction(m.group("im"))
        if m.group("imsign") == "-":
            im_ = -im_
    return GaussRational(re_, im_)


def parse_coeff(text: str) -> GaussRational:
    from .errors import ParseError

    m = _COEFF_RE.match(text)
    if not m:
        raise ParseError(f"bad coefficient: {text!r}")
    c = coeff_from_match(m)
    if m.group("sign") == "-":
        # standalone: the sign belongs to the leading number only
        return GaussRational(-c.re, c.im) if m.group("pim") is None else -c
    return c
