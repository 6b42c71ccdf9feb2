"""Finite sections of left convolution operators and certified kernel-dimension bounds.

For a window ``F`` and ``r = width(alpha)`` let ``G = interior(F, r)``.
The section ``M^F: C^G -> C^F`` is left multiplication by ``alpha``
restricted to vectors supported on ``G``; the full system on ``C^F``
describes ``{beta supported on F : alpha beta = 0}``. Their sizes give

    nullity_V / |F|  <=  dim_G Ker M_alpha  <=  1 - rank(M^F) / |F|

and the gap between the two bounds is at most ``|F \\ G| / |F|``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction
from typing import Iterable, Sequence

from .cayley import DEFAULT_CAP, cayley_key
from .errors import ZeroElementError
from .foelner import FoelnerWindow, foelner_set, interior
from .group_ring import RingElement, width
from .groups import GroupSpec
from .linalg import ExactMatrix, exact_nullspace

DECIMAL_DIGITS = 20


def section_matrix(spec: GroupSpec, alpha: RingElement, F: FoelnerWindow) -> ExactMatrix:
    """Rows ``F``, columns ``interior(F, width(alpha))``, entry ``(g, v) = alpha(g v^-1)``."""
    if not alpha:
        raise ZeroElementError("section matrix of the zero element")
    cols = interior(spec, F, width(spec, alpha, cap=F.cap))
    idx = F.index
    entries = {}
    for j, v in enumerate(cols):
        for u, a in alpha.items():
            entries[(idx[spec.mul(u, v)], j)] = a
    return ExactMatrix(F.elements, cols, entries)


def full_kernel_matrix(spec: GroupSpec, alpha: RingElement, F: FoelnerWindow) -> ExactMatrix:
    """Columns ``F``, rows ``supp(alpha) F``; its kernel is ``V_F`` intersected with ``Ker M_alpha``."""
    if not alpha:
        raise ZeroElementError("kernel matrix of the zero element")
    cols = F.elements
    products = {spec.mul(u, v) for u in alpha.support for v in cols}
    rows = tuple(sorted(products, key=cayley_key(spec, cap=F.cap)))
    ridx = {g: i for i, g in enumerate(rows)}
    entries = {}
    for j, v in enumerate(cols):
        for u, a in alpha.items():
            entries[(ridx[spec.mul(u, v)], j)] = a
    return ExactMatrix(rows, cols, entries)


@dataclass(frozen=True)
class SectionReport:
    n: int
    window_size: int
    boundary_size: int
    interior_size: int
    nullity_W: int
    nullity_V: int
    rank: int
    lower: Fraction
    upper: Fraction

    HEADER = ("n", "|F|", "|dF|", "|G|", "nullity_W", "nullity_V", "rank", "lower", "upper")

    def row(self, decimal_digits: int | None = None) -> list[str]:
        cells = [
            str(self.n), str(self.window_size), str(self.boundary_size), str(self.interior_size),
            str(self.nullity_W), str(self.nullity_V), str(self.rank),
            format_rational(self.lower), format_rational(self.upper),
        ]
        if decimal_digits is not None:
            cells += [format_decimal(self.lower, decimal_digits), format_decimal(self.upper, decimal_digits)]
        return cells


def format_rational(q: Fraction) -> str:
    """Always ``p/q``, including integers (``0/1``)."""
    return f"{q.numerator}/{q.denominator}"


def format_decimal(q: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    ctx = Context(prec=digits)
    return str(ctx.divide(Decimal(q.numerator), Decimal(q.denominator)))


def dim_bounds(spec: GroupSpec, alpha: RingElement, n: int, cap: int = DEFAULT_CAP) -> SectionReport:
    if not alpha:
        raise ZeroElementError("bounds need a nonzero alpha")
    F = foelner_set(spec, n, cap)
    section = section_matrix(spec, alpha, F)
    ker_W = exact_nullspace(section)
    ker_V = exact_nullspace(full_kernel_matrix(spec, alpha, F))
    size = len(F)
    n_interior = len(section.cols)
    return SectionReport(
        n=n,
        window_size=size,
        boundary_size=size - n_interior,
        interior_size=n_interior,
        nullity_W=ker_W.nullity,
        nullity_V=ker_V.nullity,
        rank=ker_W.rank,
        lower=Fraction(ker_V.nullity, size),
        upper=1 - Fraction(ker_W.rank, size),
    )


def _bounds_job(args):
    return dim_bounds(*args)


def convergence_report(
    spec: GroupSpec,
    alpha: RingElement,
    n_list: Iterable[int],
    cap: int = DEFAULT_CAP,
    workers: int | None = None,
) -> list[SectionReport]:
    """One independent report per window index, in the order given."""
    jobs = [(spec, alpha, n, cap) for n in n_list]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_bounds_job, jobs))
    return [_bounds_job(j) for j in jobs]


def reports_tsv(reports: Sequence[SectionReport], decimal_digits: int | None = None) -> str:
    header = list(SectionReport.HEADER)
    if decimal_digits is not None:
        header += ["lower_decimal", "upper_decimal"]
    lines = ["\t".join(header)]
    lines += ["\t".join(r.row(decimal_digits)) for r in reports]
    return "\n".join(lines) + "\n"
