"""Search growing windows for a nonzero gamma with alpha * gamma = 0."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .cayley import DEFAULT_CAP, cayley_key
from .errors import ZeroElementError
from .foelner import foelner_set
from .finite_section import full_kernel_matrix
from .gaussian import GaussRational, gaussian_gcd, normalize_associate
from .group_ring import RingElement, convolve
from .groups import GroupSpec
from .linalg import exact_nullspace


@dataclass(frozen=True)
class WitnessResult:
    found: bool
    gamma: RingElement | None
    n: int  # window index of the witness, or the largest index searched
    certified: bool

    def __bool__(self) -> bool:
        return self.found


def normalize_witness(spec: GroupSpec, gamma: RingElement) -> RingElement:
    """Primitive Gaussian-integer multiple of ``gamma`` with a normalized leading coefficient.

    Denominators are cleared, the Gaussian-integer content is divided out and
    a unit is chosen so the coefficient of the earliest support element (in
    cayley order) has positive real part and non-negative imaginary part.
    That coefficient is 1 whenever some multiple of ``gamma`` has a unit there.
    """
    if not gamma:
        raise ZeroElementError("cannot normalize zero")
    terms = sorted(gamma.items(), key=lambda t: cayley_key(spec)(t[0]))
    d = lcm(*(c.denominator() for _, c in terms))
    ints = [(g, c.scaled_numerators(d)) for g, c in terms]
    content = (0, 0)
    for _, z in ints:
        content = gaussian_gcd(content, z)
    # divide by content, then rotate by the unit that normalizes the lead
    cg = GaussRational(*content)
    lead = GaussRational(*ints[0][1]) / cg
    unit = GaussRational(*normalize_associate((int(lead.re), int(lead.im)))) / lead
    factor = unit / cg
    return RingElement({g: GaussRational(*z) * factor for g, z in ints})


def verify_witness(spec: GroupSpec, alpha: RingElement, gamma: RingElement) -> bool:
    """True iff ``gamma != 0`` and ``alpha * gamma`` vanishes, by direct convolution."""
    return bool(gamma) and not convolve(spec, alpha, gamma)


def find_witness(spec: GroupSpec, alpha: RingElement, n_max: int, cap: int = DEFAULT_CAP) -> WitnessResult:
    """First nonzero kernel vector of the full window system, for n = 1, ..., n_max."""
    if not alpha:
        raise ZeroElementError("witness search needs a nonzero alpha")
    for n in range(1, n_max + 1):
        F = foelner_set(spec, n, cap)
        ker = exact_nullspace(full_kernel_matrix(spec, alpha, F))
        if ker.nullity:
            raw = RingElement(zip(F.elements, ker.basis[0]))
            gamma = normalize_witness(spec, raw)
            return WitnessResult(True, gamma, n, verify_witness(spec, alpha, gamma))
    return WitnessResult(False, None, n_max, False)
