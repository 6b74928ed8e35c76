from .partition_schemas import (CdsFamily, ConstructionOutcome, CutHierarchy, CutNode, PartitionRequest, RigidPartition,
                                StrongKind, StrongPartition, Tournament, VerificationResult, colour_key,
                                parse_colour_key)
from .property_schemas import PropertyKind, PropertyVerdict, VerdictMode
from .report_schemas import (SCHEMA_VERSION, ExperimentReport, GrowthReason, GrowthStep, GrowthTrace, ProcessSnapshot,
                             TrialRecord)
from .rigidity_schemas import BoundReport, RigidityProfile, RigidityVerdict, Spectrum, VerdictKind

__all__ = [
    'Spectrum', 'VerdictKind', 'RigidityVerdict', 'RigidityProfile', 'BoundReport', 'RigidPartition', 'CutNode',
    'CutHierarchy', 'StrongKind', 'StrongPartition', 'CdsFamily', 'Tournament', 'PartitionRequest',
    'ConstructionOutcome', 'VerificationResult', 'colour_key', 'parse_colour_key', 'PropertyKind', 'PropertyVerdict',
    'VerdictMode', 'SCHEMA_VERSION', 'ProcessSnapshot', 'GrowthReason', 'GrowthStep', 'GrowthTrace', 'TrialRecord',
    'ExperimentReport'
]
