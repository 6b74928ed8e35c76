import builtins
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class VerdictMode(str, Enum):
    EXACT = 'Exact'
    RANDOM_SEARCH = 'RandomSearch'


class PropertyKind(str, Enum):
    HOLDS = 'Holds'
    VIOLATED = 'Violated'
    NO_VIOLATION_FOUND = 'NoViolationFound'


class PropertyVerdict(BaseModel):
    property: str = Field(..., description='Checked property, e.g. sparse(x=4, y=1.5)')
    kind: PropertyKind = Field(..., description='Holds is only ever returned in Exact mode')
    mode: VerdictMode = Field(..., description='Exhaustive enumeration or seeded falsification search')
    witness: Optional[List[List[int]]] = Field(None, description='Violating set(s), re-checkable by enumeration')
    search_budget: int = Field(0, ge=0, description='Local moves spent by the search; 0 in Exact mode')

    @builtins.property
    def violated(self) -> bool:
        return self.kind is PropertyKind.VIOLATED
