"""Preset Foelner windows, their r-boundaries and interiors.

Windows:

* ``z:d``  -- the box ``[-n, n]^d``
* ``heis`` -- ``|a| <= n, |b| <= n, |c| <= n^2``
* ``zxz2`` -- ``[-n, n] x {0, 1}``
* ``lamp`` -- inverses of ``{(L, x) : L in [0, n), x in [0, n)}``, i.e.
  ``{(M, y) : -n < y <= 0, M in [y, y + n)}``; the lamp field moves with
  the lamplighter so that left translations by generators rarely leave it

Boundary membership is decided with left translates: ``g`` is in the
r-boundary of ``F`` iff ``u g`` leaves ``F`` for some ``u`` with ``|u| <= r``.
This is the right-invariant distance to the complement, computed without
touching the (infinite) complement itself.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property

from .cayley import DEFAULT_CAP, ball, cayley_key
from .errors import ResourceCapExceeded
from .groups import FREE_ABELIAN, HEISENBERG, Z_CROSS_Z2, GroupSpec


def window_size(spec: GroupSpec, n: int) -> int:
    if spec.preset == FREE_ABELIAN:
        return (2 * n + 1) ** spec.rank
    if spec.preset == HEISENBERG:
        return (2 * n + 1) ** 2 * (2 * n * n + 1)
    if spec.preset == Z_CROSS_Z2:
        return 2 * (2 * n + 1)
    return n * 2**n


def _members(spec: GroupSpec, n: int):
    p = spec.preset
    if p == FREE_ABELIAN:
        return itertools.product(range(-n, n + 1), repeat=spec.rank)
    if p == HEISENBERG:
        return itertools.product(range(-n, n + 1), range(-n, n + 1), range(-n * n, n * n + 1))
    if p == Z_CROSS_Z2:
        return itertools.product(range(-n, n + 1), (0, 1))
    subsets = [
        frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)
    ]
    # inverse of (L, x) is (L - x, -x)
    return (
        (frozenset(q - x for q in lamps), -x) for lamps in subsets for x in range(n)
    )


class FoelnerWindow:
    """The finite set ``F_n`` of a preset exhaustion.

    ``members`` is available immediately; ``elements`` (cayley order) and
    ``index`` are computed on first use because ordering needs word lengths.
    """

    def __init__(self, spec: GroupSpec, n: int, cap: int = DEFAULT_CAP):
        if n < 1:
            raise ValueError("window index n must be >= 1")
        size = window_size(spec, n)
        if size > cap:
            raise ResourceCapExceeded(f"Foelner window n={n} of {spec}", cap)
        self.spec = spec
        self.n = n
        self.cap = cap
        self.members = frozenset(_members(spec, n))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g) -> bool:
        return g in self.members

    def __repr__(self) -> str:
        return f"FoelnerWindow({self.spec}, n={self.n}, size={len(self)})"

    @cached_property
    def elements(self) -> tuple:
        return tuple(sorted(self.members, key=cayley_key(self.spec, cap=self.cap)))

    @cached_property
    def index(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    def order(self, subset) -> tuple:
        """Elements of ``subset`` (a subset of the window) in window order."""
        idx = self.index
        return tuple(sorted(subset, key=idx.__getitem__))


def foelner_set(spec: GroupSpec, n: int, cap: int = DEFAULT_CAP) -> FoelnerWindow:
    return FoelnerWindow(spec, n, cap)


def _boundary(spec: GroupSpec, F: FoelnerWindow, r: int) -> frozenset:
    if r <= 0:
        return frozenset()
    translates = [u for u in ball(spec, r).elements if u != spec.identity()]
    mul = spec.mul
    members = F.members
    return frozenset(
        g for g in members if any(mul(u, g) not in members for u in translates)
    )


def r_boundary(spec: GroupSpec, F: FoelnerWindow, r: int) -> frozenset:
    """``{g in F : u g not in F for some |u| <= r}``; empty for ``r = 0``."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return _boundary(spec, F, r)


def interior(spec: GroupSpec, F: FoelnerWindow, r: int) -> tuple:
    """``F`` minus its r-boundary, in window order."""
    b = r_boundary(spec, F, r)
    return tuple(g for g in F.elements if g not in b)


def foelner_ratio(spec: GroupSpec, n: int, r: int, cap: int = DEFAULT_CAP) -> Fraction:
    F = foelner_set(spec, n, cap)
    return Fraction(len(r_boundary(spec, F, r)), len(F))
