"""Window-averaged projection dimension of finite-dimensional subspaces.

``dim_A(W) = sum_{g in A} <P_W 1_g, 1_g> / |A|`` with the l2 pairing
``<x, y> = sum conj(x(g)) y(g)``. For ``W`` spanned by finitely supported
vectors every quantity is a rational number and is computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .gaussian import ZERO, GaussRational
from .group_ring import RingElement
from .linalg import independent_subset, solve


@dataclass(frozen=True)
class SpannedSubspace:
    vectors: tuple  # RingElement spanning set, possibly dependent
    window: tuple  # the finite set A

    def __init__(self, vectors: Iterable[RingElement], window: Iterable = ()):
        object.__setattr__(self, "vectors", tuple(vectors))
        object.__setattr__(self, "window", tuple(dict.fromkeys(window)))

    def basis(self) -> list[RingElement]:
        keep = independent_subset([dict(v.items()) for v in self.vectors])
        return [self.vectors[i] for i in keep]


def inner(x: RingElement, y: RingElement) -> GaussRational:
    """``<x, y>``, conjugate-linear in ``x``."""
    if len(x) > len(y):
        return inner(y, x).conjugate()
    s = ZERO
    for g, a in x.items():
        b = y.coeff(g)
        if b:
            s = s + a.conjugate() * b
    return s


def _projection_diagonal(basis: Sequence[RingElement], points: Sequence) -> list[GaussRational]:
    if not basis:
        return [ZERO] * len(points)
    gram = [[inner(bi, bj) for bj in basis] for bi in basis]
    rhs = [[b.coeff(g).conjugate() for g in points] for b in basis]
    x = solve(gram, rhs)
    out = []
    for k, g in enumerate(points):
        v = ZERO
        for i, b in enumerate(basis):
            v = v + x[i][k] * b.coeff(g)
        out.append(v)
    return out


def project_coeff(W: SpannedSubspace, g) -> GaussRational:
    """``<P_W 1_g, 1_g>``; real and in ``[0, 1]``."""
    return _projection_diagonal(W.basis(), [g])[0]


def dim_A(W: SpannedSubspace) -> Fraction:
    if not W.window:
        raise ValueError("dim_A needs a nonempty window")
    diag = _projection_diagonal(W.basis(), W.window)
    total = ZERO
    for v in diag:
        total = total + v
    if not total.is_real:
        raise ArithmeticError("projection diagonal is not real")
    return total.re / len(W.window)
