"""Diophantine stability of curves over finite fields.

A curve C/F_q is stable for the extension F_{q^m}/F_q when it gains no
points there.  The package decides this from zeta data, enumerates the
real Weil polynomials compatible with stability at low genus, counts
points on hyperelliptic and plane models, expands the classical maximal
families, and builds Carlitz and Drinfeld cyclotomic covers where
stability can be certified structurally.

The candidate search lives in dscurves.enumtree; its entry point is
named enumerate and is deliberately not re-exported here.
"""

from .carlitz import (
    CycInt,
    ModulusGroup,
    carlitz_action,
    carlitz_phi,
    char_l_poly,
    characters,
    ds_criterion_51,
    place_counts,
    residual_degree,
    unit_group,
    zero_places_52,
    zero_places_52_range,
    zeta_numerator,
)
from .curves import (
    FamilyParams,
    Hyperelliptic,
    MPoly,
    PlaneAffinePlus,
    PlaneProjective,
    count_points,
    curve_from_str,
    drinfeld_dl_counts,
    family_zeta,
    hermitian_curve,
    howe_cubic,
    howe_interpolation,
    mpoly_from_str,
    ree_affine_count,
    suzuki_curve,
)
from .drinfeld import (
    BaseChangeResult,
    DrinfeldAction,
    Rank3Verdict,
    basechange_phi,
    constant_extension_places,
    descent_zero_places,
    drinfeld_action,
    drinfeld_phi,
    place_audit_rank3,
    rank3_check,
)
from .enumtree import Candidate, PartialCandidate, accept, h_coefficients, prune_range
from .errors import (
    DSError,
    InputError,
    NotACurveError,
    SizeLimitError,
    ValidationError,
)
from .fields import FiniteField, extension_field, field_from_order, make_field
from .fpoly import FieldPoly, RatFunc, poly_from_str, ratfunc_from_str
from .zeta import (
    ZetaData,
    admissible_pairs,
    ds_check,
    explicit_formula_filter,
    extend_counts,
    frobenius_from_counts,
    frobenius_from_real_weil,
    hws_interval,
    is_weil_valid,
    places_from_points,
    points_from_places,
    real_weil_from_frobenius,
)

__version__ = "0.1.0"

__all__ = [
    "BaseChangeResult",
    "Candidate",
    "CycInt",
    "DSError",
    "DrinfeldAction",
    "FamilyParams",
    "FieldPoly",
    "FiniteField",
    "Hyperelliptic",
    "InputError",
    "MPoly",
    "ModulusGroup",
    "NotACurveError",
    "PartialCandidate",
    "PlaneAffinePlus",
    "PlaneProjective",
    "Rank3Verdict",
    "RatFunc",
    "SizeLimitError",
    "ValidationError",
    "ZetaData",
    "accept",
    "admissible_pairs",
    "basechange_phi",
    "carlitz_action",
    "carlitz_phi",
    "char_l_poly",
    "characters",
    "constant_extension_places",
    "count_points",
    "curve_from_str",
    "descent_zero_places",
    "drinfeld_action",
    "drinfeld_dl_counts",
    "drinfeld_phi",
    "ds_check",
    "ds_criterion_51",
    "explicit_formula_filter",
    "extend_counts",
    "extension_field",
    "family_zeta",
    "field_from_order",
    "frobenius_from_counts",
    "frobenius_from_real_weil",
    "h_coefficients",
    "hermitian_curve",
    "howe_cubic",
    "howe_interpolation",
    "hws_interval",
    "is_weil_valid",
    "make_field",
    "mpoly_from_str",
    "place_audit_rank3",
    "place_counts",
    "places_from_points",
    "points_from_places",
    "poly_from_str",
    "prune_range",
    "ratfunc_from_str",
    "real_weil_from_frobenius",
    "ree_affine_count",
    "residual_degree",
    "suzuki_curve",
    "unit_group",
    "zero_places_52",
    "zero_places_52_range",
    "zeta_numerator",
]
