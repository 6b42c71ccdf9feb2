"""Exact sparse linear algebra over the Gaussian rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .gaussian import ONE, ZERO, GaussRational, as_gauss


@dataclass(frozen=True)
class ExactMatrix:
    """Sparse matrix whose rows and columns are labelled (typically by group elements)."""

    rows: tuple
    cols: tuple
    entries: dict = field(repr=False)  # (i, j) -> GaussRational, no zeros

    def __post_init__(self):
        nr, nc = len(self.rows), len(self.cols)
        for (i, j), v in self.entries.items():
            if not (0 <= i < nr and 0 <= j < nc):
                raise IndexError(f"entry ({i}, {j}) outside {nr}x{nc}")
            if not v:
                raise ValueError(f"stored zero at ({i}, {j})")

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence], rows=None, cols=None) -> ExactMatrix:
        nr = len(dense)
        nc = len(dense[0]) if nr else 0
        entries = {}
        for i, row in enumerate(dense):
            for j, v in enumerate(row):
                v = as_gauss(v)
                if v:
                    entries[(i, j)] = v
        return cls(tuple(rows if rows is not None else range(nr)),
                   tuple(cols if cols is not None else range(nc)), entries)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def row_dicts(self) -> list[dict]:
        out = [dict() for _ in self.rows]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def to_dense(self) -> list[list[GaussRational]]:
        nr, nc = self.shape
        out = [[ZERO] * nc for _ in range(nr)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def apply(self, x: Sequence) -> list[GaussRational]:
        """Matrix-vector product ``M x``."""
        out = [ZERO] * len(self.rows)
        for (i, j), v in self.entries.items():
            if x[j]:
                out[i] = out[i] + v * x[j]
        return out


@dataclass(frozen=True)
class Nullspace:
    nullity: int
    basis: tuple  # dense coefficient vectors in reduced echelon form
    rank: int


def _eliminate(rows: list[dict]) -> list[tuple[int, dict]]:
    """Forward elimination; returns ``[(pivot column, pivot row), ...]`` in pivot order.

    Pivot choice: the column with fewest nonzeros among the remaining rows,
    then the entry of smallest bit size, then the shortest row.
    """
    active = {i: r for i, r in enumerate(rows) if r}
    colrows: dict[int, set] = {}
    for i, r in active.items():
        for j in r:
            colrows.setdefault(j, set()).add(i)
    pivots = []
    while colrows:
        c = min(colrows, key=lambda j: (len(colrows[j]), j))
        rid = min(colrows[c], key=lambda i: (active[i][c].bit_size(), len(active[i]), i))
        prow = active.pop(rid)
        for j in prow:
            s = colrows[j]
            s.discard(rid)
            if not s:
                del colrows[j]
        inv = prow[c].inverse()
        for other in list(colrows.get(c, ())):
            row = active[other]
            f = row[c] * inv
            for j, v in prow.items():
                if j == c:
                    continue
                old = row.get(j)
                new = -(f * v) if old is None else old - f * v
                if new:
                    if old is None:
                        colrows.setdefault(j, set()).add(other)
                    row[j] = new
                elif old is not None:
                    del row[j]
                    s = colrows[j]
                    s.discard(other)
                    if not s:
                        del colrows[j]
            del row[c]
            s = colrows[c]
            s.discard(other)
            if not s:
                del colrows[c]
            if not row:
                del active[other]
        pivots.append((c, prow))
    return pivots


def rref_basis(vectors: Sequence[dict], ncols: int) -> tuple:
    """Reduced row echelon basis (natural column order) of the span of sparse vectors."""
    basis: list[tuple[int, dict]] = []  # (lead column, vector)
    for v in vectors:
        v = {j: x for j, x in v.items() if x}
        for lead, b in basis:
            f = v.get(lead)
            if f:
                for j, x in b.items():
                    nx = v.get(j, ZERO) - f * x
                    if nx:
                        v[j] = nx
                    else:
                        v.pop(j, None)
        if not v:
            continue
        lead = min(v)
        inv = v[lead].inverse()
        v = {j: x * inv for j, x in v.items()}
        for k, (bl, b) in enumerate(basis):
            f = b.get(lead)
            if f:
                nb = dict(b)
                for j, x in v.items():
                    nx = nb.get(j, ZERO) - f * x
                    if nx:
                        nb[j] = nx
                    else:
                        nb.pop(j, None)
                basis[k] = (bl, nb)
        basis.append((lead, v))
    basis.sort(key=lambda t: t[0])
    return tuple(_densify(b, ncols) for _, b in basis)


def _densify(v: dict, n: int) -> tuple:
    out = [ZERO] * n
    for j, x in v.items():
        out[j] = x
    return tuple(out)


def exact_nullspace(M: ExactMatrix) -> Nullspace:
    """Exact kernel of ``M``; the basis is in reduced echelon form."""
    ncols = len(M.cols)
    pivots = _eliminate(M.row_dicts())
    pivot_cols = {c for c, _ in pivots}
    kernel = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        x = {f: ONE}
        for c, prow in reversed(pivots):
            s = ZERO
            for j, v in prow.items():
                if j != c:
                    xj = x.get(j)
                    if xj is not None:
                        s = s + v * xj
            if s:
                x[c] = -s / prow[c]
        kernel.append(x)
    basis = rref_basis(kernel, ncols)
    return Nullspace(len(basis), basis, len(pivots))


def rank(M: ExactMatrix) -> int:
    return len(_eliminate(M.row_dicts()))


def independent_subset(vectors: Sequence[dict]) -> list[int]:
    """Indices of a maximal linearly independent subfamily, greedy in input order."""
    basis: list[tuple[object, dict]] = []
    keep = []
    for idx, v in enumerate(vectors):
        v = {j: x for j, x in v.items() if x}
        for lead, b in basis:
            f = v.get(lead)
            if f:
                for j, x in b.items():
                    nx = v.get(j, ZERO) - f * x
                    if nx:
                        v[j] = nx
                    else:
                        v.pop(j, None)
        if v:
            lead = next(iter(v))
            inv = v[lead].inverse()
            basis.append((lead, {j: x * inv for j, x in v.items()}))
            keep.append(idx)
    return keep


def solve(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list[GaussRational]]:
    """Solve ``A X = B`` for square nonsingular ``A`` (Gauss-Jordan); ``B`` is n x m."""
    n = len(A)
    m = len(B[0]) if n else 0
    aug = [[as_gauss(x) for x in A[i]] + [as_gauss(x) for x in B[i]] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:n + m] for row in aug]
