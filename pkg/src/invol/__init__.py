"""Pattern-avoiding involutions: labelled Motzkin paths, fine structure,
exact counting series, and an enumeration census.
"""

__version__ = "0.1.0"

from .perms import (
    CycleDecomposition,
    NotABijection,
    NotAnInvolution,
    Permutation,
    PositionRole,
    all_involutions,
    standardize,
)
from .paths import (
    InvalidPath,
    LabelledMotzkinPath,
    LabellingKind,
    ascii_drawing,
    enumerate_paths,
    involution_of_path,
    is_irreducible,
    labelling_kind,
    path_of_involution,
    reflect_path,
)
from .structure import (
    Decomposition,
    FineClass,
    break_consecutiveness,
    classify,
    connected_components,
    inflate,
    insert_fixed_point,
    is_simple,
    is_simple_via_path,
    proper_intervals,
    skeleton_decomposition,
)
from .series import (
    BivarSeries,
    Series,
    bivariate_by_name,
    series_by_name,
)
from .census import (
    CensusQuery,
    CensusReport,
    GroupBy,
    appendix_listing,
    enumerate_involutions,
    reconcile,
    run_census,
)

__all__ = [
    "CycleDecomposition",
    "NotABijection",
    "NotAnInvolution",
    "Permutation",
    "PositionRole",
    "all_involutions",
    "standardize",
    "InvalidPath",
    "LabelledMotzkinPath",
    "LabellingKind",
    "ascii_drawing",
    "enumerate_paths",
    "involution_of_path",
    "is_irreducible",
    "labelling_kind",
    "path_of_involution",
    "reflect_path",
    "Decomposition",
    "FineClass",
    "break_consecutiveness",
    "classify",
    "connected_components",
    "inflate",
    "insert_fixed_point",
    "is_simple",
    "is_simple_via_path",
    "proper_intervals",
    "skeleton_decomposition",
    "BivarSeries",
    "Series",
    "bivariate_by_name",
    "series_by_name",
    "CensusQuery",
    "CensusReport",
    "GroupBy",
    "appendix_listing",
    "enumerate_involutions",
    "reconcile",
    "run_census",
]
