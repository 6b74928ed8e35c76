from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .rigidity_schemas import RigidityVerdict

SCHEMA_VERSION = 1


class ProcessSnapshot(BaseModel):
    n: int = Field(..., ge=1, description='Vertex count')
    d: int = Field(..., ge=1, description='Target minimum degree')
    tau_d: int = Field(..., ge=0, description='Hitting time: edges added when the minimum degree first reached d')
    seed: int = Field(..., description='Seed of the process')
    edges: List[Tuple[int, int]] = Field(..., description='Edges in the order the process added them')

    @property
    def time(self) -> int:
        return len(self.edges)


class GrowthReason(str, Enum):
    ZERO_EXTENSION = 'zero-extension'
    GLUE = 'glue'


class GrowthStep(BaseModel):
    vertex: int = Field(..., ge=0, description='Vertex added')
    reason: GrowthReason = Field(..., description='Rule that justified the addition')
    anchors: List[int] = Field(..., description='d neighbours (0-extension) or shared vertices (glue) used')


class GrowthTrace(BaseModel):
    d: int = Field(..., ge=1, description='Dimension d')
    seed_clique: List[int] = Field(..., description='(d+1)-clique the growth started from')
    additions: List[GrowthStep] = Field(default_factory=list, description='Additions in order, for replay')
    final_set: List[int] = Field(..., description='Grown vertex set, sorted')
    verdict: Optional[RigidityVerdict] = Field(None, description='Independent rank validation of final_set')


class TrialRecord(BaseModel):
    index: int = Field(..., ge=0, description='Trial index; reports are sorted by it')
    seed: int = Field(..., description='Derived seed of this trial')
    values: Dict[str, Any] = Field(default_factory=dict, description='Per-trial measurements')


class ExperimentReport(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, description='Report schema version')
    experiment: str = Field(..., description='Experiment id, e.g. hitting-time')
    parameters: Dict[str, Any] = Field(..., description='Full parameter block the report is a function of')
    master_seed: int = Field(..., description='Master seed; trial seeds derive from it')
    provenance: Dict[str, str] = Field(
        default_factory=dict,
        description='Statement reproduced and which constants were free engineering choices',
    )
    trials: List[TrialRecord] = Field(default_factory=list, description='Per-trial records, sorted by index')
    aggregate: Dict[str, Any] = Field(default_factory=dict, description='Aggregate statistics')
    artifact_version: str = Field(..., description='rigidity-lab version that produced the report')
    wall_clock: float = Field(0.0, ge=0, description='Seconds spent; excluded from reproducibility')
