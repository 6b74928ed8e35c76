from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from pydantic import BaseModel, Field

Pair = Tuple[int, int]


def colour_key(i: int, j: int) -> str:
    """Serialized key of the colour pair {i, j}, smaller index first"""
    i, j = (i, j) if i < j else (j, i)
    return f"{i},{j}"


def parse_colour_key(key: str) -> Pair:
    i, j = (int(part) for part in key.split(','))
    return i, j


class RigidPartition(BaseModel):
    d: int = Field(..., ge=1, description='Dimension d; the partition has d+1 parts')
    parts: List[List[int]] = Field(..., description='Vertex sets V_0..V_d, 0-based, empties allowed')
    edge_colours: Dict[str, List[Tuple[int, int]]] = Field(
        ...,
        description='E_ij keyed "i,j" with 0-based part indices i < j',
    )

    @classmethod
    def from_sets(
        cls,
        d: int,
        parts: Iterable[Iterable[int]],
        colours: Mapping[Pair, Iterable[Tuple[int, int]]],
    ) -> 'RigidPartition':
        """Canonical partition: every pair key present, parts and edges sorted"""
        edge_colours: Dict[str, List[Tuple[int, int]]] = {
            colour_key(i, j): [] for i, j in combinations(range(d + 1), 2)
        }
        for (i, j), edges in colours.items():
            edge_colours[colour_key(i, j)] = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return cls(d=d, parts=[sorted(p) for p in parts], edge_colours=edge_colours)

    def colour_pairs(self) -> List[Pair]:
        return list(combinations(range(self.d + 1), 2))

    def colour_class(self, i: int, j: int) -> FrozenSet[Tuple[int, int]]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.edge_colours.get(colour_key(i, j), []))

    def colour_of_edge(self) -> Dict[Tuple[int, int], Pair]:
        """Map from every coloured edge to its colour pair"""
        owner: Dict[Tuple[int, int], Pair] = {}
        for key, edges in self.edge_colours.items():
            pair = parse_colour_key(key)
            for u, v in edges:
                owner[(min(u, v), max(u, v))] = pair
        return owner

    def part_of_vertex(self) -> Dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}

    def coloured_edges(self) -> FrozenSet[Tuple[int, int]]:
        """Ê, the union of all colour classes"""
        return frozenset(self.colour_of_edge())


class CutNode(BaseModel):
    members: List[int] = Field(..., description='Vertex set U of this node, sorted')
    colour: Optional[int] = Field(None, description='Colour j of the monochromatic split; None at leaves')
    children: List['CutNode'] = Field(default_factory=list, description='Blocks of the split, in order')

    @property
    def is_leaf(self) -> bool:
        return not self.children


CutNode.model_rebuild()


class CutHierarchy(BaseModel):
    trees: List[Optional[CutNode]] = Field(..., description='One laminar tree per part; None for an empty part')


class StrongKind(str, Enum):
    TYPE_I = 'TypeI'
    TYPE_II = 'TypeII'
    BIPARTITE = 'Bipartite'


class StrongPartition(BaseModel):
    kind: StrongKind = Field(..., description='TypeI has d parts; TypeII and Bipartite have d+1')
    d: int = Field(..., ge=1, description='Dimension d')
    parts: List[List[int]] = Field(..., description='Vertex sets V_0, V_1, ...')
    side_a: Optional[List[int]] = Field(None, description='Class A of the bipartition (Bipartite kind only)')
    forests: Optional[List[List[Tuple[int, int]]]] = Field(
        None,
        description='Forest F_i inside G[A_i, B_i] per part (Bipartite kind only)',
    )
    scores: Optional[List[int]] = Field(None, description='Nondecreasing s_i with |F_i| >= s_i (Bipartite kind only)')


class CdsFamily(BaseModel):
    d: int = Field(..., ge=1, description='Dimension d; the family has C(d+1, 2) sets')
    sets: Dict[str, List[int]] = Field(..., description='A_ij keyed "i,j" with 0-based indices i < j <= d')


class Tournament(BaseModel):
    size: int = Field(..., ge=1, description='Number of players, d+1')
    winner: Dict[str, int] = Field(..., description='Winner of every pair keyed "i,j"')

    def beats(self, i: int, j: int) -> bool:
        return self.winner[colour_key(i, j)] == i

    def out_neighbours(self, i: int) -> List[int]:
        return [j for j in range(self.size) if j != i and self.beats(i, j)]

    def out_degrees(self) -> List[int]:
        return [len(self.out_neighbours(i)) for i in range(self.size)]


class PartitionRequest(BaseModel):
    d: int = Field(..., ge=1, description='Number of parts of the random assignment')
    alpha: float = Field(1 / 7, gt=0, lt=1, description='Slack: (1-alpha)*delta/d neighbours per vertex and part')
    beta: float = Field(0.5, ge=0, description='Balance slack of |V_i ∩ A_j| around n/(t*d)')
    seed: int = Field(0, description='Master seed')
    max_retries: int = Field(200, ge=1, description='Attempts before giving up')


class ConstructionOutcome(BaseModel):
    success: bool = Field(..., description='True when the returned parts meet every condition')
    parts: Optional[List[List[int]]] = Field(None, description='Parts of the successful attempt')
    attempts: int = Field(..., ge=0, description='Attempts used')
    min_cross_degree: int = Field(
        ...,
        description='Best attempt: min over vertices (pairs for common neighbours) and parts of neighbours in a part',
    )
    target: float = Field(..., description='Count every part must reach, (1-alpha)*delta/parts for degrees')
    strong: Optional[StrongPartition] = Field(None, description='Verified strong partition, when one was requested')
    reason: Optional[str] = Field(None, description='Why the construction failed')


class VerificationResult(BaseModel):
    accepted: bool = Field(..., description='Accepted iff every G_ij is connected and every part has a hierarchy')
    reason: Optional[str] = Field(None, description='Rejection reason')
    hierarchy: Optional[CutHierarchy] = Field(None, description='Certificate of the monochromatic-cut condition')
    oracle_checked: List[int] = Field(default_factory=list, description='Parts cross-checked by the all-subsets oracle')
    oracle_divergences: List[int] = Field(
        default_factory=list,
        description='Parts accepted through a hierarchy while the all-subsets oracle failed',
    )
