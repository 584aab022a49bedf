"""Curve models, point counting, and the families with known zetas."""

from .counting import (
    count_points,
    drinfeld_dl_counts,
    family_zeta,
    hermitian_curve,
    howe_cubic,
    howe_interpolation,
    ree_affine_count,
    suzuki_curve,
)
from .models import (
    FamilyParams,
    Hyperelliptic,
    MPoly,
    PlaneAffinePlus,
    PlaneProjective,
    curve_from_str,
    mpoly_from_str,
)

__all__ = [
    "FamilyParams",
    "Hyperelliptic",
    "MPoly",
    "PlaneAffinePlus",
    "PlaneProjective",
    "count_points",
    "curve_from_str",
    "drinfeld_dl_counts",
    "family_zeta",
    "hermitian_curve",
    "howe_cubic",
    "howe_interpolation",
    "mpoly_from_str",
    "ree_affine_count",
    "suzuki_curve",
]
