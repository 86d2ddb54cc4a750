"""Dynamics of x -> a*x^(2^k) + b and its reciprocal over binary fields.

The package builds finite fields F_{2^n}, decomposes the projective line
into cycles under the two map families, explains the cycle lengths through
supersingular curves and their group structure, and conjugates reciprocal
maps into the normal form x -> (c*x^(2^k))^(-1).
"""

from .fields import (
    BinaryField,
    ExtensionEmbedding,
    ExtensionRootCounter,
    FieldElement,
    FieldMismatchError,
    InvariantViolationError,
    LinearizedPoly,
    ResourceLimitError,
    SubsetXorSolver,
    extension_of,
    nth_roots,
    polynomial_roots,
    quadratic_extension,
)
from .maps import (
    ClosedFormIterate,
    CycleStructure,
    MapSpec,
    ProjPoint,
    QuarticReduction,
    closed_form,
    iterated_orbit_length,
    orbit_length_options,
    reduce_to_quartic,
)
from .curves import (
    CurvePoint,
    CurveSpec,
    CycleCatalogEntry,
    GroupStructure,
    catalog_length_sets,
    curve_from_map,
    cycle_catalog,
    divisors,
    duplication_x,
    euler_phi,
    group_structure,
    half_multiple_relation,
    lift_x,
    map_coefficients,
    point_add,
    point_count,
    predict_orbit_length,
    scalar_mul,
)
from .conjugacy import (
    ConjugacyData,
    TauMap,
    bluher_root_count,
    fixed_point_count,
    solve_conjugation,
    tau_eval,
    theta_fixed_points,
    verify_conjugation,
)
from .reporting import (AnalysisReport, cycle_labels, cycles_to_dict,
                        element_echo, emit_dot, map_echo, point_label,
                        to_json)
from .cache import cache_key, cache_load, cache_store, cached_group_structure

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BinaryField",
    "ClosedFormIterate",
    "ConjugacyData",
    "CurvePoint",
    "CurveSpec",
    "CycleCatalogEntry",
    "CycleStructure",
    "ExtensionEmbedding",
    "ExtensionRootCounter",
    "FieldElement",
    "FieldMismatchError",
    "GroupStructure",
    "InvariantViolationError",
    "LinearizedPoly",
    "MapSpec",
    "ProjPoint",
    "QuarticReduction",
    "ResourceLimitError",
    "SubsetXorSolver",
    "TauMap",
    "bluher_root_count",
    "cache_key",
    "cache_load",
    "cache_store",
    "cached_group_structure",
    "catalog_length_sets",
    "closed_form",
    "curve_from_map",
    "cycle_catalog",
    "cycle_labels",
    "cycles_to_dict",
    "divisors",
    "duplication_x",
    "element_echo",
    "emit_dot",
    "euler_phi",
    "extension_of",
    "fixed_point_count",
    "group_structure",
    "half_multiple_relation",
    "iterated_orbit_length",
    "lift_x",
    "map_coefficients",
    "nth_roots",
    "orbit_length_options",
    "point_add",
    "point_count",
    "map_echo",
    "point_label",
    "polynomial_roots",
    "predict_orbit_length",
    "quadratic_extension",
    "reduce_to_quartic",
    "scalar_mul",
    "solve_conjugation",
    "tau_eval",
    "theta_fixed_points",
    "to_json",
    "verify_conjugation",
]
