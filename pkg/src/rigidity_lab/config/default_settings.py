import os

from pydantic import BaseModel, Field


def _threads_from_env() -> int:
    raw = os.environ.get('RIGIDITYLAB_THREADS')
    if raw is None:
        return os.cpu_count() or 1
    return max(1, int(raw))


class LabSettings(BaseModel):
    prime: int = Field(2**31 - 1, description='Prime modulus of the field used for randomized rank tests')
    eig_tol: float = Field(1e-9, description='Relative tolerance of symmetric eigenvalue computations')
    bound_tol: float = Field(1e-8, description='Absolute tolerance of quantitative bound comparisons')
    identity_tol: float = Field(1e-12, description='Entrywise tolerance of the L^- = (M+T)/2 identity')
    rigidity_trials: int = Field(3, description='Random embeddings tried before declaring a graph flexible')
    rigidity_probe: int = Field(1, description='Dimensions probed past the first flexible one')
    max_retries: int = Field(200, description='Attempts of randomized partition constructions')
    regular_rejection_cap: int = Field(100_000, description='Configuration model samples before giving up')
    exact_cut_threshold: int = Field(8, description='Largest part size cross-checked with the all-subsets oracle')
    oracle_cap: int = Field(12, description='Largest part size the all-subsets oracle accepts')
    sparse_exact_max_n: int = Field(18, description='Largest n decided exactly by the sparseness checker')
    connector_exact_max_n: int = Field(16, description='Largest n decided exactly by connector/expander checkers')
    search_starts: int = Field(64, description='Hill-climbing starts of the falsification search')
    search_budget: int = Field(2000, description='Local moves per falsification search')
    sparse_rank_columns: int = Field(1500, description='Matrix width above which rank uses sparse elimination')
    max_seed_cliques: int = Field(64, description='Seed cliques tried by the greedy rigid closure')
    threads: int = Field(default_factory=_threads_from_env, description='Worker cap for trial fan-out')
    artifact_version: str = Field('0.1.0', description='Version stamped into every report')


DEFAULT_SETTINGS = LabSettings()
