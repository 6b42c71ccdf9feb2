"""Exact finite-section bounds for kernel dimensions of group-ring convolution operators."""

from .cayley import Ball, ball, word_length
from .dim_estimator import SpannedSubspace, dim_A, project_coeff
from .errors import ParseError, RadiusExceeded, ResourceCapExceeded, ShapeError, VndimError, ZeroElementError
from .finite_section import (
    SectionReport,
    convergence_report,
    dim_bounds,
    full_kernel_matrix,
    section_matrix,
)
from .foelner import FoelnerWindow, foelner_ratio, foelner_set, interior, r_boundary
from .gaussian import GaussRational
from .group_ring import RingElement, combine, convolve, delta, format_ring, parse_ring, width
from .groups import GroupSpec, identity, inverse, multiply
from .linalg import ExactMatrix, exact_nullspace
from .witness import WitnessResult, find_witness, verify_witness

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "ball",
    "word_length",
    "SpannedSubspace",
    "dim_A",
    "project_coeff",
    "ParseError",
    "RadiusExceeded",
    "ResourceCapExceeded",
    "ShapeError",
    "VndimError",
    "ZeroElementError",
    "SectionReport",
    "convergence_report",
    "dim_bounds",
    "full_kernel_matrix",
    "section_matrix",
    "FoelnerWindow",
    "foelner_ratio",
    "foelner_set",
    "interior",
    "r_boundary",
    "GaussRational",
    "RingElement",
    "combine",
    "convolve",
    "delta",
    "format_ring",
    "parse_ring",
    "width",
    "GroupSpec",
    "identity",
    "inverse",
    "multiply",
    "ExactMatrix",
    "exact_nullspace",
    "WitnessResult",
    "find_witness",
    "verify_witness",
]
