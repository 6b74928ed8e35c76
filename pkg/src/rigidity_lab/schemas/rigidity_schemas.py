from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, Field


class Spectrum(BaseModel):
    values: List[float] = Field(..., description='Eigenvalues in ascending order')
    tolerance: float = Field(..., ge=0, description='Relative accuracy of every eigenvalue')

    @property
    def order(self) -> int:
        return len(self.values)


class VerdictKind(str, Enum):
    RIGID_CERTIFIED = 'RigidCertified'
    PROBABLY_FLEXIBLE = 'ProbablyFlexible'


class RigidityVerdict(BaseModel):
    kind: VerdictKind = Field(..., description='RigidCertified only when some trial reached the maximal rank')
    dim: int = Field(..., ge=1, description='Dimension d tested')
    observed_rank: int = Field(..., ge=0, description='Best rank over GF(p) across trials')
    required_rank: int = Field(..., ge=0, description='d*n - C(d+1, 2)')
    trials: int = Field(..., ge=1, description='Embeddings sampled')
    seed: int = Field(..., description='Master seed of the test')

    @property
    def certified(self) -> bool:
        return self.kind is VerdictKind.RIGID_CERTIFIED


class RigidityProfile(BaseModel):
    verdicts: List[RigidityVerdict] = Field(..., description='Verdicts for d = 1, 2, ... in scan order')
    rigidity_number: int = Field(..., ge=0, description='Largest d certified before the first flexible one')
    non_monotone: List[int] = Field(
        default_factory=list,
        description='Dimensions certified although a smaller dimension came out flexible',
    )


class BoundReport(BaseModel):
    dim: int = Field(..., ge=1, description='Dimension d of the partition')
    min_half_a: float = Field(..., description='min a(G_ij)/2 over all colour pairs')
    lambda_value: float = Field(..., description='λ_{C(d+1,2)+1}(L(G, q)) evaluated as λ_m(L^-)')
    lambda_index: int = Field(..., ge=1, description='m = |E^| - d*n + C(d+1, 2) + 1')
    holds: bool = Field(..., description='lambda_value >= min_half_a - tol')
    per_pair_a: Dict[str, float] = Field(..., description='a(G_ij) keyed "i,j" with 0-based part indices')
    decomposition_error: float = Field(..., ge=0, description='max |L^- - (M+T)/2| entry')
    tol: float = Field(..., gt=0, description='Comparison tolerance')
