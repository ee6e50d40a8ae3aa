"""Records written by the command line tools."""

from typing import Optional

from pydantic import BaseModel

from threetangle.models.run_manifest import RunManifest
from threetangle.models.state_files import ComplexPair

__all__ = [
    "DecompositionResult",
    "MemberRecord",
    "OptimizeResult",
    "TraceSummary",
]


class MemberRecord(BaseModel):
    weight: float
    amplitudes: list[ComplexPair]
    tau3: float


class TraceSummary(BaseModel):
    restarts: int
    best_restart: int
    initial: float
    final: float
    accepted: int
    iterations: int
    step_halvings: int
    restart_finals: list[float]


class OptimizeResult(BaseModel):
    value: float
    objective: str
    ensemble_size: int
    reconstruction_residual: float
    witness: list[MemberRecord]
    trace: TraceSummary
    manifest: RunManifest
    family: Optional[str] = None
    x: Optional[float] = None
    tau3_family: Optional[float] = None


class DecompositionResult(BaseModel):
    family: str
    x: float
    tau3: Optional[float]
    average_tangle: float
    reconstruction_residual: float
    members: list[MemberRecord]
    manifest: RunManifest
