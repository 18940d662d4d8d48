"""Exact toolkit for weighted scrolls over P^1.

Constructs weighted scrolls F(a_1..a_n | b_1..b_n) as toric varieties,
analyses their generic anticanonical hypersurfaces (section spaces, base
loci, singularity censuses), classifies the mildly singular K3-fibred
Calabi-Yau families living in them, and verifies the rank-one matrix
degenerations of the half-anticanonical models by exact Groebner and
polytope computations.

All arithmetic is exact: arbitrary-precision integers, rationals, or
prime fields.
"""

__version__ = "0.1.0"

from .scroll import ScrollSpec, DivisorClass, parse_spec
from .sections import section_space, divisor_polytope, base_locus

__all__ = [
    "ScrollSpec",
    "DivisorClass",
    "parse_spec",
    "section_space",
    "divisor_polytope",
    "base_locus",
    "__version__",
]
