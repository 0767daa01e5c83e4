"""Exact verification and enumeration of fixed point data of semi-free
Hamiltonian circle actions on closed symplectic 8-manifolds with second
Betti number one.

All arithmetic is exact (integers, rationals, polynomials over the
rationals); nothing here floats.
"""

__version__ = "0.1.0"

from .classify import (
    ADMISSIBLE_SHAPES,
    ClassifyError,
    EnumerationResult,
    Family,
    FanoClassification,
    FanoFamilyRecord,
    Rejection,
    admissible_dim_pairs,
    catalog,
    classify_fano,
    default_fano_table,
    enumerate_all,
    enumerate_case,
    fano_table_hash,
    index_from_extremal,
    match_fp_class,
    sphere_constraints,
    sphere_index_rules,
    verification_report,
)
from .dataio import DataError, dump_data, dumps_data, load_data, loads_data
from .dh import dh_profile, positivity_check, total_volume
from .localization import (
    FourDimExtremalNormal,
    FourDimSplitNormal,
    PointNormal,
    SixDimNormal,
    SurfaceNormal,
    abbv_sum,
    abbv_terms,
    contribution,
    contribution_series_oracle,
)
from .model import (
    ComponentType,
    FixedComponent,
    FixedPointData,
    betti_vector,
    cp2_extremal,
    cp3_extremal,
    dim_pair,
    fourdim_interior,
    fp_equivalent,
    kirwan_betti,
    point_component,
    reverse_action,
    surface_component,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
