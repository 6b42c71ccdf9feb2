from fractions import Fraction

import pytest

from vndim import (
    GroupSpec, RingElement, SpannedSubspace, delta, dim_A, exact_nullspace, foelner_set,
    full_kernel_matrix, project_coeff,
)
from vndim.gaussian import GaussRational

from conftest import PRESETS, random_ring_element
from oracles import gram_schmidt_diagonal

Z1 = GroupSpec.parse("z:1")
E, G = (0,), (1,)


def test_project_coeff_examples():
    W = SpannedSubspace([delta(E)])
    assert project_coeff(W, E) == 1
    assert project_coeff(W, G) == 0
    W = SpannedSubspace([RingElement({E: 1, G: 1})])
    assert project_coeff(W, E) == GaussRational(1) / 2


def test_dim_A_examples():
    assert dim_A(SpannedSubspace([RingElement({E: 1, G: 1})], [E, G])) == Fraction(1, 2)
    A = [(x,) for x in range(-3, 4)]
    assert dim_A(SpannedSubspace([delta(g) for g in A], A)) == 1
    with pytest.raises(ValueError):
        dim_A(SpannedSubspace([delta(E)], []))


def test_dependent_and_empty_spans():
    a = RingElement({E: 1, G: GaussRational(0, 1)})
    W = SpannedSubspace([a, a.scale(GaussRational(2, 3)), delta(E), delta(G)], [E, G])
    assert len(W.basis()) == 2
    assert dim_A(W) == 1
    assert dim_A(SpannedSubspace([], [E])) == 0


def _random_span(rng, spec, window, k):
    return [random_ring_element(rng, spec, pool=window, max_terms=4) for _ in range(k)]


@pytest.mark.parametrize("name", PRESETS)
def test_matches_gram_schmidt(name, rng):
    spec = GroupSpec.parse(name)
    window = foelner_set(spec, 1).elements
    for _ in range(10):
        vecs = _random_span(rng, spec, window, rng.randint(1, 4))
        W = SpannedSubspace(vecs, window)
        expected = gram_schmidt_diagonal([dict(v.items()) for v in vecs], window)
        got = [project_coeff(W, g) for g in window]
        assert [c.re for c in got] == expected
        assert all(c.is_real and 0 <= c.re <= 1 for c in got)


@pytest.mark.parametrize("name", PRESETS)
def test_counting_formula_monotonicity_positivity(name, rng):
    spec = GroupSpec.parse(name)
    window = foelner_set(spec, 2).elements
    for _ in range(5):
        vecs = _random_span(rng, spec, window, 4)
        dims = []
        for k in range(1, 5):
            W = SpannedSubspace(vecs[:k], window)
            d = dim_A(W)
            assert d == Fraction(len(W.basis()), len(window))
            assert d > 0
            dims.append(d)
        assert dims == sorted(dims)


def test_support_outside_window():
    # W = span{1_e + 1_g} measured on A = {e}: <P 1_e, 1_e> = 1/2
    assert dim_A(SpannedSubspace([RingElement({E: 1, G: 1})], [E])) == Fraction(1, 2)


@pytest.mark.parametrize(
    "name,alpha",
    [
        ("zxz2", {(0, 0): 1, (0, 1): -1}),
        ("lamp", {(frozenset(), 0): 1, (frozenset({0}), 0): -1}),
        ("z:2", {(0, 0): 1, (1, 0): 1, (0, 1): GaussRational(0, 1)}),
    ],
)
def test_consistency_with_kernel_nullity(name, alpha):
    spec = GroupSpec.parse(name)
    alpha = RingElement(alpha)
    for n in (1, 2, 3):
        F = foelner_set(spec, n)
        ns = exact_nullspace(full_kernel_matrix(spec, alpha, F))
        W = SpannedSubspace([RingElement(zip(F.elements, v)) for v in ns.basis], F.elements)
        assert dim_A(W) == Fraction(ns.nullity, len(F))
