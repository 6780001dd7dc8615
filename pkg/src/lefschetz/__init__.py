"""Exact computation with finite-length graded modules over polynomial rings.

Core pipeline: validate a presentation by a matrix of forms, build its
four-term free resolution with exact signs, compute Hilbert functions two
independent ways, test symmetry/unimodality/level, decide the Weak
Lefschetz Property, and compute the non-Lefschetz locus as determinantal
ideals in the dual ring.
"""

from .errors import (
    LefschetzError,
    ParseError,
    PropertyViolation,
    SizeCapExceeded,
    ValidationError,
)
from .families import make_circulant, make_complete_intersection
from .groebner import Ideal, ideal_contains, ideal_intersect
from .hilbert import (
    check_parity_conditions,
    hilbert_closed,
    hilbert_rank,
    hilbert_table,
    is_strictly_unimodal,
    is_symmetric,
)
from .locus import (
    check_crux,
    dual_transpose_identity,
    locus_ideal,
    locus_matrix,
    nll_ideal,
    reduced_locus,
)
from .modules import (
    ArtinianGradedModule,
    LinearForm,
    check_propagation,
    module_from_presentation,
    module_from_structure,
    module_to_data,
    wlp_decide,
)
from .poly import Poly, parse_poly
from .presentation import GradedPresentation, build_presentation
from .resolution import (
    BuchsbaumRimResolution,
    build_resolution,
    check_symgor_shape,
    socle_degrees,
    verify_exactness,
)

__all__ = [
    "ArtinianGradedModule",
    "BuchsbaumRimResolution",
    "GradedPresentation",
    "Ideal",
    "LefschetzError",
    "LinearForm",
    "ParseError",
    "Poly",
    "PropertyViolation",
    "SizeCapExceeded",
    "ValidationError",
    "build_presentation",
    "build_resolution",
    "check_crux",
    "check_parity_conditions",
    "check_propagation",
    "check_symgor_shape",
    "dual_transpose_identity",
    "hilbert_closed",
    "hilbert_rank",
    "hilbert_table",
    "ideal_contains",
    "ideal_intersect",
    "is_strictly_unimodal",
    "is_symmetric",
    "locus_ideal",
    "locus_matrix",
    "make_circulant",
    "make_complete_intersection",
    "module_from_presentation",
    "module_from_structure",
    "module_to_data",
    "nll_ideal",
    "parse_poly",
    "reduced_locus",
    "socle_degrees",
    "verify_exactness",
    "wlp_decide",
]
