"""Exact majorization and catalytic majorization toolkit."""

from .core import (
    DoublyStochasticMatrix,
    MajorizationReport,
    ProbVec,
    SortedProbVec,
    as_fraction,
    ds_witness,
    majorizes,
    majorizes_alt,
    normalize,
    pad_zeros,
    pv,
    sample_S,
    sort_desc,
    t_transform_chain,
    tensor,
    uniform_vector,
)
from .errors import (
    AllZero,
    DimensionMismatch,
    NegativeEntry,
    NotMajorized,
    NotNormalizable,
    NotStrict,
    NotUseful,
    PreconditionViolated,
    TargetTooSmall,
    TrumpkitError,
    UniformCatalyst,
)
from .explorer import RegionRecord, sample_region, write_region_csv
from .solver import (
    RayProbeResult,
    SearchConfig,
    SearchResult,
    SearchStatus,
    find_catalyst,
    h_value,
    minimize_f,
    rationalize,
    ray_probe,
)
from .trumping import (
    CatalysisClassification,
    GeometricCatalyst,
    SeparationWitness,
    TrumpCertificate,
    boundary_witness,
    classify,
    geometric_catalyst,
    interior_radius,
    nonuniform_demo,
    separating_example,
    trumps_with,
)

__version__ = "0.1.0"

__all__ = [
    "AllZero",
    "CatalysisClassification",
    "DimensionMismatch",
    "DoublyStochasticMatrix",
    "GeometricCatalyst",
    "MajorizationReport",
    "NegativeEntry",
    "NotMajorized",
    "NotNormalizable",
    "NotStrict",
    "NotUseful",
    "PreconditionViolated",
    "ProbVec",
    "RayProbeResult",
    "RegionRecord",
    "SearchConfig",
    "SearchResult",
    "SearchStatus",
    "SeparationWitness",
    "SortedProbVec",
    "TargetTooSmall",
    "TrumpCertificate",
    "TrumpkitError",
    "UniformCatalyst",
    "as_fraction",
    "boundary_witness",
    "classify",
    "ds_witness",
    "find_catalyst",
    "geometric_catalyst",
    "h_value",
    "interior_radius",
    "majorizes",
    "majorizes_alt",
    "minimize_f",
    "nonuniform_demo",
    "normalize",
    "pad_zeros",
    "pv",
    "rationalize",
    "ray_probe",
    "sample_S",
    "sample_region",
    "separating_example",
    "sort_desc",
    "t_transform_chain",
    "tensor",
    "trumps_with",
    "uniform_vector",
    "write_region_csv",
]
