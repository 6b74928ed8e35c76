from typing import Optional, Sequence

from loguru import logger

from rigidity_lab.algebra import rank_mod_p, rank_mod_p_sparse
from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import TooFewVertices
from rigidity_lab.generators import derive_seed, make_rng
from rigidity_lab.graphs import Graph, is_connected
from rigidity_lab.rigidity.matrices import (random_field_embedding, required_rank, rigidity_matrix_mod_p,
                                            sparse_rigidity_rows)
from rigidity_lab.schemas import RigidityProfile, RigidityVerdict, VerdictKind


def randomized_rigidity_test(
    g: Graph,
    d: int,
    trials: Optional[int] = None,
    seed: int = 0,
    prime: Optional[int] = None,
    vertex_order: Optional[Sequence[int]] = None,
) -> RigidityVerdict:
    """One-sided d-rigidity certificate from ranks over GF(p) at random embeddings

    The rank over the prime field at any embedding is a lower bound for the generic rank,
    so reaching d*n - C(d+1, 2) once certifies d-rigidity. Failing every trial only makes
    flexibility likely.

    Args:
        g (Graph): Graph with n >= d+1.
        d (int): Dimension.
        trials (Optional[int], optional): Embeddings to try. defaults to DEFAULT_SETTINGS.rigidity_trials
        seed (int, optional): Master seed; trial t uses stream t. defaults to 0
        prime (Optional[int], optional): Field size. defaults to DEFAULT_SETTINGS.prime
        vertex_order (Optional[Sequence[int]], optional): Column order for sparse elimination. defaults to None

    Returns:
        RigidityVerdict: RigidCertified or ProbablyFlexible with the best rank seen.
    """
    trials = DEFAULT_SETTINGS.rigidity_trials if trials is None else trials
    prime = DEFAULT_SETTINGS.prime if prime is None else prime
    if d < 1:
        raise ValueError(f"Dimension must be at least 1, got {d}")
    if trials < 1:
        raise ValueError(f"At least one trial is needed, got {trials}")
    if g.n < d + 1:
        raise TooFewVertices(f"{d}-rigidity needs at least {d + 1} vertices, got {g.n}")
    required = required_rank(g.n, d)
    sparse = d * g.n > DEFAULT_SETTINGS.sparse_rank_columns
    best = 0
    used = 0
    for trial in range(trials):
        used = trial + 1
        embedding = random_field_embedding(g.n, d, prime, make_rng(seed, trial))
        if sparse:
            rank = rank_mod_p_sparse(sparse_rigidity_rows(g, embedding, prime, vertex_order), prime, stop_at=required)
        else:
            rank = rank_mod_p(rigidity_matrix_mod_p(g, embedding, prime))
        assert rank <= required, f"Rank {rank} exceeds the rigidity bound {required}"
        logger.debug(f"d={d} trial {trial}: rank {rank}/{required}")
        best = max(best, rank)
        if best == required:
            break
    kind = VerdictKind.RIGID_CERTIFIED if best == required else VerdictKind.PROBABLY_FLEXIBLE
    return RigidityVerdict(kind=kind, dim=d, observed_rank=best, required_rank=required, trials=used, seed=seed)


def rigidity_profile(
    g: Graph,
    max_dim: Optional[int] = None,
    trials: Optional[int] = None,
    seed: int = 0,
    probe: Optional[int] = None,
) -> RigidityProfile:
    """Verdicts for d = 1, 2, ... scanning upward

    The scan stops ``probe`` dimensions after the first flexible one. A dimension certified
    after a flexible one is recorded in ``non_monotone``.

    Args:
        g (Graph): Graph.
        max_dim (Optional[int], optional): Largest dimension scanned. defaults to n-1
        trials (Optional[int], optional): Trials per dimension. defaults to DEFAULT_SETTINGS.rigidity_trials
        seed (int, optional): Master seed; dimension d uses derive_seed(seed, d). defaults to 0
        probe (Optional[int], optional): Dimensions probed past the first flexible one.
            defaults to DEFAULT_SETTINGS.rigidity_probe

    Returns:
        RigidityProfile: Verdicts, rigidity number and non-monotone dimensions.
    """
    probe = DEFAULT_SETTINGS.rigidity_probe if probe is None else probe
    max_dim = g.n - 1 if max_dim is None else min(max_dim, g.n - 1)
    if not is_connected(g):
        return RigidityProfile(verdicts=[], rigidity_number=0)
    verdicts = []
    rigidity_number = 0
    first_flexible: Optional[int] = None
    non_monotone = []
    for d in range(1, max_dim + 1):
        if first_flexible is not None and d > first_flexible + probe:
            break
        verdict = randomized_rigidity_test(g, d, trials=trials, seed=derive_seed(seed, d))
        verdicts.append(verdict)
        if verdict.certified:
            if first_flexible is None:
                rigidity_number = d
            else:
                non_monotone.append(d)
                logger.warning(f"Dimension {d} certified although dimension {first_flexible} came out flexible")
        elif first_flexible is None:
            first_flexible = d
    return RigidityProfile(verdicts=verdicts, rigidity_number=rigidity_number, non_monotone=non_monotone)


def rigidity_number(g: Graph, trials: Optional[int] = None, seed: int = 0, probe: Optional[int] = None) -> int:
    """Largest d certified before the first flexible dimension; 0 for disconnected graphs"""
    return rigidity_profile(g, trials=trials, seed=seed, probe=probe).rigidity_number
