import pytest

from vndim import GroupSpec, ball, word_length
from vndim.errors import ResourceCapExceeded

from conftest import PRESETS
from oracles import word_lengths


def test_ball_examples():
    z1 = GroupSpec.parse("z:1")
    b = ball(z1, 2)
    assert [g for g, _ in b.entries] == [(0,), (-1,), (1,), (-2,), (2,)]
    assert len(ball(GroupSpec.parse("z:2"), 2)) == 13
    # word enumeration of length <= 2 over x^{+-1}, y^{+-1}, deduplicated: 17
    assert len(ball(GroupSpec.parse("heis"), 2)) == 17


def test_word_length_examples():
    assert word_length(GroupSpec.parse("z:2"), (2, -1), 10) == 3
    assert word_length(GroupSpec.parse("heis"), (0, 0, 1), 6) == 4
    assert word_length(GroupSpec.parse("heis"), (0, 0, 1), 3) is None
    assert word_length(GroupSpec.parse("zxz2"), (0, 1), 1) == 1


@pytest.mark.parametrize("name", PRESETS)
def test_ball_matches_word_enumeration(name):
    spec = GroupSpec.parse(name)
    oracle = word_lengths(spec, 4)
    b = ball(spec, 4)
    assert dict(b.entries) == oracle
    for g, d in oracle.items():
        assert word_length(spec, g, 4) == d


@pytest.mark.parametrize("name", PRESETS)
def test_ball_order_and_monotonicity(name):
    spec = GroupSpec.parse(name)
    prev = None
    for r in range(5):
        b = ball(spec, r)
        keys = [(d, spec.sort_key(g)) for g, d in b.entries]
        assert keys == sorted(keys)
        assert len(set(b.elements)) == len(b)
        if prev is not None:
            assert set(prev.elements) <= set(b.elements)
            assert b.entries[: len(prev)] == prev.entries
        prev = b


@pytest.mark.parametrize("name", PRESETS)
def test_left_translation_is_one_lipschitz(name):
    spec = GroupSpec.parse(name)
    for g in ball(spec, 3).elements:
        lg = word_length(spec, g, 8)
        for s in spec.generators:
            assert abs(word_length(spec, spec.mul(s, g), 8) - lg) <= 1


def test_ball_cap():
    spec = GroupSpec.parse("lamp")
    with pytest.raises(ResourceCapExceeded):
        ball(spec, 6, cap=20)
    # a failed growth leaves the cache usable
    assert len(ball(spec, 1)) == 4


def test_negative_radius():
    with pytest.raises(ValueError):
        ball(GroupSpec.parse("z:1"), -1)
