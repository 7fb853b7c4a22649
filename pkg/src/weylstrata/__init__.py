"""Stratification of reductive algebraic groups by 2-special Weyl representations.

The package computes, for the classical and exceptional series, the partition
of a group into strata: locally closed unions of conjugacy classes of fixed
dimension, indexed by bipartitions (classical types) or by atlas rows of
degree/invariant pairs (exceptional types).  It covers the bipartition
combinatorics, the unipotent Jordan-type bijections in every characteristic,
the map from Weyl-group conjugacy classes onto strata, and a command-line
front end.
"""

from .atlas import (
    Atlas,
    AtlasRow,
    CarterLabel,
    IsoFlavor,
    IsolatedSubgroup,
    RepLabel,
    cross_section,
    exc_group_from_name,
    fiber_of_rep,
    isolated_subgroups,
    load_atlas,
    m_of_class,
    parse_carter,
    rep_of_class,
    strata_for_characteristic,
)
from .classical import (
    EigenOrbit,
    GroupDescriptor,
    OrbitKind,
    Series,
    SpectralDatum,
    StratumResult,
    classify,
    dimension_set,
    enumerate_strata,
    positive_roots,
    series_from_name,
    stratum_excess,
)
from .errors import ConsistencyError, DomainError, StrataError
from .jordan import (
    JordanFamily,
    LabeledPartition,
    apply_bijection,
    codomain,
    enumerate_jordan,
    family_from_name,
    invert_bijection,
)
from .partitions import (
    Bipartition,
    Excess,
    Partition,
    bp_sum,
    enumerate_bipartitions,
    enumerate_partitions,
    has_excess,
    is_bipartition,
    n_invariant,
)
from .verify import CheckResult, check_names, run_check, run_suite
from .weyl import (
    ClassFiber,
    SignedCycleType,
    WeylSeries,
    WeylType,
    enumerate_classes,
    fixed_space_dim,
    jordan_of_class,
    strata_fibers,
    stratum_of_class,
    weyl_series_from_name,
)

__version__ = "0.1.0"

__all__ = [
    "Atlas",
    "AtlasRow",
    "Bipartition",
    "CarterLabel",
    "CheckResult",
    "ClassFiber",
    "ConsistencyError",
    "DomainError",
    "EigenOrbit",
    "Excess",
    "GroupDescriptor",
    "IsoFlavor",
    "IsolatedSubgroup",
    "JordanFamily",
    "LabeledPartition",
    "OrbitKind",
    "Partition",
    "RepLabel",
    "Series",
    "SignedCycleType",
    "SpectralDatum",
    "StrataError",
    "StratumResult",
    "WeylSeries",
    "WeylType",
    "apply_bijection",
    "bp_sum",
    "check_names",
    "classify",
    "codomain",
    "cross_section",
    "dimension_set",
    "enumerate_bipartitions",
    "enumerate_classes",
    "enumerate_jordan",
    "enumerate_partitions",
    "enumerate_strata",
    "exc_group_from_name",
    "family_from_name",
    "fiber_of_rep",
    "fixed_space_dim",
    "has_excess",
    "invert_bijection",
    "is_bipartition",
    "isolated_subgroups",
    "jordan_of_class",
    "load_atlas",
    "m_of_class",
    "n_invariant",
    "parse_carter",
    "positive_roots",
    "rep_of_class",
    "run_check",
    "run_suite",
    "series_from_name",
    "strata_fibers",
    "strata_for_characteristic",
    "stratum_excess",
    "stratum_of_class",
    "weyl_series_from_name",
    "__version__",
]
