import asyncio
import time
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional

import numpy as np
from loguru import logger

from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.generators import derive_seed
from rigidity_lab.schemas import ExperimentReport, TrialRecord


def plain(value: Any) -> Any:
    """Recursively cast numpy scalars, arrays, tuples, sets and enums to JSON-ready Python values"""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return [plain(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(plain(v) for v in value)
    return value


def _coerce(default: Any, value: Any) -> Any:
    if isinstance(default, bool):
        return value if isinstance(value, bool) else str(value).lower() in ('1', 'true', 'yes')
    if isinstance(default, int):
        return int(value)
    if isinstance(default, float):
        return float(value)
    if isinstance(default, list):
        items = value.split(',') if isinstance(value, str) else list(value)
        kind = type(default[0]) if default else int
        return [kind(item) for item in items]
    return value


class ExperimentBuilder:
    """Base of the scripted experiments

    Subclasses declare ``experiment``, ``provenance`` and ``default_parameters`` and implement
    ``plan``, ``run_trial`` and ``aggregate``. Trials run in worker threads; every trial gets
    derive_seed(master_seed, index) so the report depends only on the parameter block.
    """

    experiment: str = ''
    provenance: Dict[str, str] = {}
    default_parameters: Dict[str, Any] = {}

    def __init__(self, threads: Optional[int] = None) -> None:
        """Initializes the ExperimentBuilder.

        Args:
            threads (Optional[int], optional): Trials running at once. defaults to DEFAULT_SETTINGS.threads
        """
        self.threads = max(1, DEFAULT_SETTINGS.threads if threads is None else threads)

    def resolve_parameters(self, overrides: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
        """Defaults merged with overrides, each coerced to the type of its default

        Args:
            overrides (Optional[Mapping[str, Any]], optional): Parameter overrides. defaults to None

        Returns:
            Dict[str, Any]: Full parameter block, including ``seed``.
        """
        defaults = {'seed': 0, **self.default_parameters}
        overrides = dict(overrides or {})
        unknown = sorted(set(overrides) - set(defaults))
        if unknown:
            raise ValueError(f"Unknown parameters for {self.experiment}: {unknown}; expected {sorted(defaults)}")
        return {key: _coerce(value, overrides[key]) if key in overrides else value for key, value in defaults.items()}

    def plan(self, params: Dict[str, Any]) -> List[Dict[str, Any]]:
        """Trial specifications; the index of a spec is its trial index"""
        raise NotImplementedError

    def run_trial(self, spec: Dict[str, Any], seed: int, params: Dict[str, Any]) -> Dict[str, Any]:
        raise NotImplementedError

    def aggregate(self, records: List[TrialRecord], params: Dict[str, Any]) -> Dict[str, Any]:
        raise NotImplementedError

    async def _run_one(
        self,
        semaphore: asyncio.Semaphore,
        index: int,
        spec: Dict[str, Any],
        params: Dict[str, Any],
        total: int,
    ) -> TrialRecord:
        seed = derive_seed(params['seed'], index)
        async with semaphore:
            logger.debug(f"Running {self.experiment} trial {index + 1}/{total}: {spec}")
            values = await asyncio.to_thread(self.run_trial, spec, seed, params)
        return TrialRecord(index=index, seed=seed, values=plain({**spec, **values}))

    async def build_report(self, overrides: Optional[Mapping[str, Any]] = None) -> ExperimentReport:
        """Runs every trial and assembles the report.

        Args:
            overrides (Optional[Mapping[str, Any]], optional): Parameter overrides. defaults to None

        Returns:
            ExperimentReport: Sorted trial records, aggregate and provenance.
        """
        started = time.perf_counter()
        params = self.resolve_parameters(overrides)
        specs = self.plan(params)
        logger.info(f"Running {len(specs)} {self.experiment} trials on {self.threads} worker(s)...")
        semaphore = asyncio.Semaphore(self.threads)
        records = await asyncio.gather(
            *[self._run_one(semaphore, index, spec, params, len(specs)) for index, spec in enumerate(specs)])
        records = sorted(records, key=lambda record: record.index)
        aggregate = plain(self.aggregate(records, params))
        logger.info(f"Finished {self.experiment}: {aggregate}")
        return ExperimentReport(
            experiment=self.experiment,
            parameters=plain(params),
            master_seed=params['seed'],
            provenance={key: text.format(**params) for key, text in self.provenance.items()},
            trials=records,
            aggregate=aggregate,
            artifact_version=DEFAULT_SETTINGS.artifact_version,
            wall_clock=time.perf_counter() - started,
        )
