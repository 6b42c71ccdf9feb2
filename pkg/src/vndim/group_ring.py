"""Finitely supported elements of the group ring with Gaussian-rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .cayley import DEFAULT_CAP, cayley_key, require_word_length
from .errors import ParseError, ZeroElementError
from .gaussian import COEFF_PATTERN, ONE, ZERO, GaussRational, as_gauss, coeff_from_match, format_coeff
from .groups import GroupSpec

DEFAULT_WIDTH_RADIUS = 64


class RingElement:
    """Immutable finite map ``element -> GaussRational`` without zero entries."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for g, c in items:
            c = as_gauss(c)
            if g in acc:
                acc[g] = acc[g] + c
            else:
                acc[g] = c
        self._terms = {g: c for g, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict) -> RingElement:
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def coeff(self, g) -> GaussRational:
        return self._terms.get(g, ZERO)

    __getitem__ = coeff

    @property
    def support(self) -> frozenset:
        return frozenset(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{g!r}: {c}" for g, c in self._terms.items())
        return f"RingElement({{{inner}}})"

    def __add__(self, other: RingElement) -> RingElement:
        return combine(ONE, self, ONE, other)

    def __sub__(self, other: RingElement) -> RingElement:
        return combine(ONE, self, -ONE, other)

    def __neg__(self) -> RingElement:
        return RingElement._trusted({g: -c for g, c in self._terms.items()})

    def scale(self, c) -> RingElement:
        return combine(c, self, ZERO, ZERO_ELEMENT)


ZERO_ELEMENT = RingElement()


def delta(g, c=1) -> RingElement:
    """``c`` times the indicator of ``g``."""
    return RingElement({g: c})


def combine(c1, alpha: RingElement, c2, beta: RingElement) -> RingElement:
    """``c1*alpha + c2*beta`` with zero coefficients dropped."""
    c1 = as_gauss(c1)
    c2 = as_gauss(c2)
    out: dict = {}
    if c1:
        for g, c in alpha.items():
            out[g] = c1 * c
    if c2:
        for g, c in beta.items():
            v = c2 * c
            out[g] = out[g] + v if g in out else v
    return RingElement._trusted({g: c for g, c in out.items() if c})


def convolve(spec: GroupSpec, alpha: RingElement, beta: RingElement) -> RingElement:
    """Group-ring product: ``(alpha beta)(g) = sum_v alpha(g v^-1) beta(v)``."""
    mul = spec.mul
    out: dict = {}
    for u, a in alpha.items():
        for v, b in beta.items():
            g = mul(u, v)
            p = a * b
            out[g] = out[g] + p if g in out else p
    return RingElement._trusted({g: c for g, c in out.items() if c})


def width(spec: GroupSpec, alpha: RingElement, r_max: int = DEFAULT_WIDTH_RADIUS, cap: int = DEFAULT_CAP) -> int:
    """Largest word length in the support of ``alpha``."""
    if not alpha:
        raise ZeroElementError("the zero element has no width")
    return max(require_word_length(spec, g, r_max, cap) for g in alpha.support)


def ordered_terms(spec: GroupSpec, alpha: RingElement) -> list:
    """Terms of ``alpha`` in cayley order (word length, then normal form)."""
    key = cayley_key(spec)
    return sorted(alpha.items(), key=lambda t: key(t[0]))


# -- text form -----------------------------------------------------------

def format_ring(spec: GroupSpec, alpha: RingElement) -> str:
    """Render as ``c1*g1 + c2*g2 - ...``; the zero element renders as ``0``."""
    if not alpha:
        return "0"
    parts = []
    for i, (g, c) in enumerate(ordered_terms(spec, alpha)):
        lead = c.re if c.re != 0 else c.im
        if i == 0:
            sign = "-" if lead < 0 else ""
            parts.append(f"{sign}{format_coeff(-c if lead < 0 else c)}*{spec.format_element(g)}")
        elif lead < 0:
            parts.append(f" - {format_coeff(-c)}*{spec.format_element(g)}")
        else:
            parts.append(f" + {format_coeff(c)}*{spec.format_element(g)}")
    return "".join(parts)


_TERM_RE = re.compile(
    rf"\s*(?P<sign>[+-])?\s*{COEFF_PATTERN}\s*\*\s*(?P<elem>\([^()]*\))\s*"
)


def parse_ring(spec: GroupSpec, text: str) -> RingElement:
    """Inverse of :func:`format_ring`.

    A leading ``+``/``-`` applies to the whole coefficient of its term, so
    ``- 1/2+1*i*(0)`` is ``(-1/2 - i)*(0)``.
    """
    if text.strip() == "0":
        return ZERO_ELEMENT
    pos = 0
    terms = []
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse ring element at {text[pos:]!r}")
        if terms and m.group("sign") is None:
            raise ParseError(f"missing '+' or '-' before {text[pos:]!r}")
        c = coeff_from_match(m)
        if m.group("sign") == "-":
            c = -c
        terms.append((spec.parse_element(m.group("elem")), c))
        pos = m.end()
    if not terms:
        raise ParseError("empty ring element")
    return RingElement(terms)


def format_ring_lines(spec: GroupSpec, alpha: RingElement) -> str:
    """File form: one ``re im element`` line per term."""
    return "".join(
        f"{_fmt(c.re)} {_fmt(c.im)} {spec.format_element(g)}\n" for g, c in ordered_terms(spec, alpha)
    )


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def parse_ring_lines(spec: GroupSpec, lines: Iterable[str]) -> RingElement:
    terms = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 2)
        if len(parts) != 3:
            raise ParseError(f"expected 're im element', got {line!r}")
        try:
            c = GaussRational(Fraction(parts[0]), Fraction(parts[1]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient in {line!r}") from exc
        terms.append((spec.parse_element(parts[2]), c))
    return RingElement(terms)
