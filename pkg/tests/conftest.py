import os
import random

import pytest

from vndim import GroupSpec, RingElement, ball
from vndim.gaussian import GaussRational

SEED = int(os.environ.get("VNDIM_SEED", "20240531"))

PRESETS = ["z:1", "z:2", "heis", "zxz2", "lamp"]


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture(params=PRESETS)
def spec(request):
    return GroupSpec.parse(request.param)


def random_coeff(rng, complex_ok=True):
    while True:
        re_ = GaussRational(rng.randint(-3, 3), 1)
        if rng.random() < 0.3:
            re_ = GaussRational(rng.randint(-5, 5)) / rng.randint(1, 4)
        im = GaussRational(0)
        if complex_ok and rng.random() < 0.3:
            im = GaussRational(rng.randint(-3, 3)) / rng.randint(1, 3)
        c = re_ + im * GaussRational(0, 1)
        if c:
            return c


def random_ring_element(rng, spec, radius=2, max_terms=4, complex_ok=True, pool=None):
    """Nonzero element with support in ball(radius) (or in ``pool``)."""
    pool = list(pool) if pool is not None else list(ball(spec, radius).elements)
    k = rng.randint(1, min(max_terms, len(pool)))
    support = rng.sample(pool, k)
    return RingElement({g: random_coeff(rng, complex_ok) for g in support})


def random_element(rng, spec, size=4):
    p = spec.preset
    if p == "free-abelian":
        return tuple(rng.randint(-size, size) for _ in range(spec.rank))
    if p == "heisenberg":
        return tuple(rng.randint(-size, size) for _ in range(3))
    if p == "z-cross-z2":
        return (rng.randint(-size, size), rng.randint(0, 1))
    lamps = frozenset(x for x in range(-size, size + 1) if rng.random() < 0.3)
    return (lamps, rng.randint(-size, size))


ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
