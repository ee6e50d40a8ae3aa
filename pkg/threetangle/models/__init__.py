from threetangle.models.curve_region import CurveRegion
from threetangle.models.family import BackgroundTerm, FamilySpec
from threetangle.models.results import (
    DecompositionResult,
    MemberRecord,
    OptimizeResult,
    TraceSummary,
)
from threetangle.models.run_manifest import RunManifest
from threetangle.models.state_files import (
    DensityMatrixFile,
    PureStateFile,
    complex_to_pairs,
    pairs_to_complex,
)

__all__ = [
    "BackgroundTerm",
    "CurveRegion",
    "DecompositionResult",
    "DensityMatrixFile",
    "FamilySpec",
    "MemberRecord",
    "OptimizeResult",
    "PureStateFile",
    "RunManifest",
    "TraceSummary",
    "complex_to_pairs",
    "pairs_to_complex",
]
