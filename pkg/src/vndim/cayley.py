"""Word metric on the presets via breadth-first search of the Cayley graph.

The metric is right-invariant, ``d(g, h) = |g h^-1|``, so ``d(e, g) = |g|``
and the neighbours of ``g`` at distance one are the left translates
``s g`` for generators ``s``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import RadiusExceeded, ResourceCapExceeded
from .groups import GroupSpec

DEFAULT_CAP = 5_000_000


@dataclass(frozen=True)
class Ball:
    radius: int
    entries: tuple  # ((element, distance), ...) in cayley order

    @property
    def elements(self) -> tuple:
        return tuple(g for g, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, g) -> bool:
        return g in self._members

    @property
    def _members(self) -> frozenset:
        m = self.__dict__.get("_m")
        if m is None:
            m = frozenset(self.elements)
            object.__setattr__(self, "_m", m)
        return m


class _Explorer:
    """Incrementally grown BFS layers for one group; guarded by a lock."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.dist = {spec.identity(): 0}
        self.layers = [[spec.identity()]]
        self.lock = threading.Lock()

    def grow_to(self, r: int, cap: int) -> None:
        with self.lock:
            while len(self.layers) <= r:
                self._grow_one(cap)

    def _grow_one(self, cap: int) -> None:
        spec = self.spec
        dist = self.dist
        d = len(self.layers)
        new = {}
        for g in self.layers[-1]:
            for s in spec.generators:
                h = spec.mul(s, g)
                if h not in dist and h not in new:
                    new[h] = d
                    if len(dist) + len(new) > cap:
                        raise ResourceCapExceeded(f"ball of radius {d} in {spec}", cap)
        dist.update(new)
        self.layers.append(list(new))

    def count_within(self, r: int) -> int:
        return sum(len(layer) for layer in self.layers[: r + 1])


_explorers: dict[GroupSpec, _Explorer] = {}
_explorers_lock = threading.Lock()


def _explorer(spec: GroupSpec) -> _Explorer:
    with _explorers_lock:
        ex = _explorers.get(spec)
        if ex is None:
            ex = _explorers[spec] = _Explorer(spec)
        return ex


def ball(spec: GroupSpec, r: int, cap: int = DEFAULT_CAP) -> Ball:
    """All elements of word length at most ``r``, ordered by (distance, normal form)."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    ex = _explorer(spec)
    ex.grow_to(r, cap)
    if ex.count_within(r) > cap:
        raise ResourceCapExceeded(f"ball of radius {r} in {spec}", cap)
    entries = []
    for d, layer in enumerate(ex.layers[: r + 1]):
        entries.extend((g, d) for g in sorted(layer, key=spec.sort_key))
    return Ball(r, tuple(entries))


def word_length(spec: GroupSpec, g, r_max: int, cap: int = DEFAULT_CAP) -> int | None:
    """``|g|`` if it is at most ``r_max``, else ``None``."""
    spec.check(g)
    ex = _explorer(spec)
    with ex.lock:
        d = ex.dist.get(g)
        if d is not None:
            return d if d <= r_max else None
        while len(ex.layers) <= r_max:
            ex._grow_one(cap)
            d = ex.dist.get(g)
            if d is not None:
                return d
    return None


def require_word_length(spec: GroupSpec, g, r_max: int, cap: int = DEFAULT_CAP) -> int:
    d = word_length(spec, g, r_max, cap)
    if d is None:
        raise RadiusExceeded(f"word length of {spec.format_element(g)} exceeds {r_max}")
    return d


def cayley_key(spec: GroupSpec, r_max: int = 256, cap: int = DEFAULT_CAP):
    """Sort key function ordering elements by (word length, normal form)."""

    def key(g):
        return (require_word_length(spec, g, r_max, cap), spec.sort_key(g))

    return key
