"""Preset finitely generated groups with fixed symmetric generating sets.

Elements are plain hashable tuples in a unique normal form:

========================  ==========================================
preset                    normal form
========================  ==========================================
``z:d`` (free abelian)    ``(x_1, ..., x_d)``
``heis`` (Heisenberg)     ``(a, b, c)`` = [[1, a, c], [0, 1, b], [0, 0, 1]]
``zxz2`` (Z x Z/2)        ``(m, e)`` with ``e`` in {0, 1}
``lamp`` (Z/2 wr Z)       ``(lamps: frozenset[int], position: int)``
========================  ==========================================
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Hashable

from .errors import ParseError, ShapeError

GroupElement = Hashable

FREE_ABELIAN = "free-abelian"
HEISENBERG = "heisenberg"
Z_CROSS_Z2 = "z-cross-z2"
LAMPLIGHTER = "lamplighter"

_ALIASES = {
    "heis": HEISENBERG,
    HEISENBERG: HEISENBERG,
    "zxz2": Z_CROSS_Z2,
    Z_CROSS_Z2: Z_CROSS_Z2,
    "lamp": LAMPLIGHTER,
    LAMPLIGHTER: LAMPLIGHTER,
}

_SHORT = {HEISENBERG: "heis", Z_CROSS_Z2: "zxz2", LAMPLIGHTER: "lamp"}


@dataclass(frozen=True)
class GroupSpec:
    """One of the preset groups together with its generating set.

    ``rank`` is only meaningful for the free abelian preset.
    """

    preset: str
    rank: int = 0
    generators: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.preset == FREE_ABELIAN:
            if not isinstance(self.rank, int) or self.rank < 1:
                raise ParseError(f"free-abelian rank must be a positive integer, got {self.rank!r}")
        elif self.preset in (HEISENBERG, Z_CROSS_Z2, LAMPLIGHTER):
            if self.rank:
                raise ParseError(f"{self.preset} takes no rank")
        else:
            raise ParseError(f"unknown group preset {self.preset!r}")
        object.__setattr__(self, "generators", self._make_generators())

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        """Parse ``z:d``, ``heis``, ``zxz2`` or ``lamp`` (long names also accepted)."""
        t = text.strip().lower()
        m = re.fullmatch(r"(?:z|free-abelian):(\d+)", t)
        if m:
            return cls(FREE_ABELIAN, int(m.group(1)))
        if t in _ALIASES:
            return cls(_ALIASES[t])
        raise ParseError(f"unknown group spec {text!r}; expected z:<d>, heis, zxz2 or lamp")

    def __str__(self) -> str:
        if self.preset == FREE_ABELIAN:
            return f"z:{self.rank}"
        return _SHORT[self.preset]

    # -- group law (unchecked fast paths) ----------------------------
    def identity(self) -> Any:
        p = self.preset
        if p == FREE_ABELIAN:
            return (0,) * self.rank
        if p == HEISENBERG:
            return (0, 0, 0)
        if p == Z_CROSS_Z2:
            return (0, 0)
        return (frozenset(), 0)

    def mul(self, g, h):
        p = self.preset
        if p == FREE_ABELIAN:
            return tuple(x + y for x, y in zip(g, h))
        if p == HEISENBERG:
            return (g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1])
        if p == Z_CROSS_Z2:
            return (g[0] + h[0], g[1] ^ h[1])
        lamps, x = g
        other, y = h
        if not other:
            return (lamps, x + y)
        return (lamps.symmetric_difference([q + x for q in other]), x + y)

    def inv(self, g):
        p = self.preset
        if p == FREE_ABELIAN:
            return tuple(-x for x in g)
        if p == HEISENBERG:
            a, b, c = g
            return (-a, -b, a * b - c)
        if p == Z_CROSS_Z2:
            return (-g[0], g[1])
        lamps, x = g
        return (frozenset(q - x for q in lamps), -x)

    def sort_key(self, g):
        """Key giving the lexicographic order on normal forms."""
        if self.preset == LAMPLIGHTER:
            return (tuple(sorted(g[0])), g[1])
        return g

    # -- validation --------------------------------------------------
    def check(self, g) -> None:
        """Raise :class:`ShapeError` unless ``g`` is a normal form for this group."""
        p = self.preset
        ok = False
        if p == FREE_ABELIAN:
            ok = isinstance(g, tuple) and len(g) == self.rank and all(_is_int(x) for x in g)
        elif p == HEISENBERG:
            ok = isinstance(g, tuple) and len(g) == 3 and all(_is_int(x) for x in g)
        elif p == Z_CROSS_Z2:
            ok = isinstance(g, tuple) and len(g) == 2 and _is_int(g[0]) and g[1] in (0, 1) and _is_int(g[1])
        else:
            ok = (
                isinstance(g, tuple)
                and len(g) == 2
                and isinstance(g[0], frozenset)
                and all(_is_int(q) for q in g[0])
                and _is_int(g[1])
            )
        if not ok:
            raise ShapeError(f"{g!r} is not an element of {self}")

    # -- generators --------------------------------------------------
    def _make_generators(self) -> tuple:
        p = self.preset
        if p == FREE_ABELIAN:
            gens = []
            for i in range(self.rank):
                e = [0] * self.rank
                e[i] = 1
                gens.append(tuple(e))
                e[i] = -1
                gens.append(tuple(e))
            return tuple(gens)
        if p == HEISENBERG:
            return ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0))
        if p == Z_CROSS_Z2:
            return ((1, 0), (-1, 0), (0, 1))
        return ((frozenset({0}), 0), (frozenset(), 1), (frozenset(), -1))

    # -- text form ---------------------------------------------------
    def format_element(self, g) -> str:
        p = self.preset
        if p in (FREE_ABELIAN, HEISENBERG):
            return "(" + ",".join(str(x) for x in g) + ")"
        if p == Z_CROSS_Z2:
            return f"({g[0]};{g[1]})"
        return "({" + ",".join(str(x) for x in sorted(g[0])) + "};" + str(g[1]) + ")"

    def parse_element(self, text: str):
        t = re.sub(r"\s+", "", text)
        p = self.preset
        if p in (FREE_ABELIAN, HEISENBERG):
            m = re.fullmatch(r"\((-?\d+(?:,-?\d+)*)\)", t)
            if m:
                g = tuple(int(x) for x in m.group(1).split(","))
                if len(g) == (self.rank if p == FREE_ABELIAN else 3):
                    return g
        elif p == Z_CROSS_Z2:
            m = re.fullmatch(r"\((-?\d+);([01])\)", t)
            if m:
                return (int(m.group(1)), int(m.group(2)))
        else:
            m = re.fullmatch(r"\(\{((?:-?\d+(?:,-?\d+)*)?)\};(-?\d+)\)", t)
            if m:
                body = m.group(1)
                lamps = [int(x) for x in body.split(",")] if body else []
                if len(set(lamps)) == len(lamps):
                    return (frozenset(lamps), int(m.group(2)))
        raise ParseError(f"bad element literal {text!r} for group {self}")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def identity(spec: GroupSpec):
    return spec.identity()


def multiply(spec: GroupSpec, a, b):
    spec.check(a)
    spec.check(b)
    return spec.mul(a, b)


def inverse(spec: GroupSpec, a):
    spec.check(a)
    return spec.inv(a)


ELEMENT_GRAMMAR = """\
group specs:
  z:<d>   free abelian group Z^d (d >= 1), generators +-e_i
  heis    integer Heisenberg group, generators x^+-1, y^+-1 with
          x=(1,0,0), y=(0,1,0); (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')
  zxz2    Z x Z/2, generators s^+-1=(+-1;0) and t=(0;1)
  lamp    lamplighter Z/2 wr Z, generators a=({0};0), m^+-1=({};+-1);
          (L,x)(L',x') = (L symdiff (L'+x), x+x')
element literals:
  z:<d>   (x1,...,xd)        e.g. (1,-2)
  heis    (a,b,c)            e.g. (0,0,1)
  zxz2    (m;e), e in {0,1}  e.g. (3;1)
  lamp    ({l1,...,lk};x)    e.g. ({0,2};3), ({};0)
"""
