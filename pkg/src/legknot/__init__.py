"""Diagrammatic calculus of virtual Legendrian knots.

Legendrian Gauss diagrams (cyclic words of arrow endpoints, signed cusps,
and singular marks), their move systems, planar and surface realizations,
invariants, formal resolution algebra, and a bounded equivalence search.
"""

from .diagram import (
    CanonicalCode,
    FlatVirtualString,
    LegendrianGaussDiagram,
    arc_coorientation,
    canonical_code,
    canonical_form,
    canonical_string_code,
    underlying_string,
    validate,
)
from .sites import Site, SiteKind, cusp, head, mark, tail

__all__ = [
    "CanonicalCode",
    "FlatVirtualString",
    "LegendrianGaussDiagram",
    "Site",
    "SiteKind",
    "arc_coorientation",
    "canonical_code",
    "canonical_form",
    "canonical_string_code",
    "cusp",
    "head",
    "mark",
    "tail",
    "underlying_string",
    "validate",
]

__version__ = "0.1.0"
