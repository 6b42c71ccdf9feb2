"""Independent reference computations used by the tests.

None of these go through the package's BFS, window or elimination code.
"""

import itertools
from fractions import Fraction


def heis_matrix(g):
    a, b, c = g
    return [[1, a, c], [0, 1, b], [0, 0, 1]]


def matmul3(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def heis_from_matrix(M):
    assert M[0][0] == M[1][1] == M[2][2] == 1 and M[1][0] == M[2][0] == M[2][1] == 0
    return (M[0][1], M[1][2], M[0][2])


def heis_matrix_inverse(M):
    # unipotent upper triangular: inverse has -a, -b, ab - c
    a, b, c = M[0][1], M[1][2], M[0][2]
    return [[1, -a, a * b - c], [0, 1, -b], [0, 0, 1]]


def word_lengths(spec, radius):
    """Minimal word length of every element reachable by a word of length <= radius.

    Enumerates all words over the generators explicitly (no BFS dedup).
    """
    best = {}
    gens = spec.generators
    for length in range(radius + 1):
        for word in itertools.product(gens, repeat=length):
            g = spec.identity()
            for s in word:
                g = spec.mul(g, s)
            if g not in best:
                best[g] = length
    return best


def boundary_by_distance(spec, members, r, lengths):
    """``{g in F : d(g, G \\ F) <= r}`` with ``d(g, h) = |g h^-1|``.

    For each g, scans h = u g over all u of word length <= r taken from the
    explicit word enumeration ``lengths``.
    """
    out = set()
    for g in members:
        for u, d in lengths.items():
            if d <= r and spec.mul(u, g) not in members:
                out.add(g)
                break
    return out


def sympy_rank(M):
    """Rank of an ExactMatrix computed by sympy over the Gaussian rationals."""
    from sympy import QQ_I
    from sympy.polys.matrices import DomainMatrix

    nr, nc = M.shape
    if nr == 0 or nc == 0:
        return 0
    rows = [[QQ_I(x.re, x.im) for x in row] for row in M.to_dense()]
    return DomainMatrix(rows, (nr, nc), QQ_I).rank()


def gram_schmidt_diagonal(vectors, points):
    """``<P 1_g, 1_g>`` via exact orthogonalization (no normalization, no Gram solve).

    vectors: list of dicts element -> GaussRational. Returns Fractions.
    """
    ortho = []  # (dict, squared norm)
    for v in vectors:
        w = dict(v)
        for q, qq in ortho:
            # coefficient <q, w> / <q, q>
            ip = 0
            for g, x in q.items():
                if g in w:
                    ip = x.conjugate() * w[g] + ip
            if ip:
                f = ip / qq
                for g, x in q.items():
                    w[g] = w.get(g, 0) - f * x
        w = {g: x for g, x in w.items() if x}
        if w:
            nn = sum((x.norm() for x in w.values()), Fraction(0))
            ortho.append((w, nn))
    result = []
    for g in points:
        s = Fraction(0)
        for q, qq in ortho:
            if g in q:
                s += q[g].norm() / qq
        result.append(s)
    return result
