import os
import os.path as osp
import uuid
from typing import Any, Mapping, Optional

from loguru import logger

from rigidity_lab.formats import dump_report
from rigidity_lab.schemas import ExperimentReport
from rigidity_lab.workflow import EXPERIMENT_BUILDERS


class RigidityLab:

    def __init__(self, threads: Optional[int] = None, log_to_file: bool = True) -> None:
        """Instantiate RigidityLab

        Args:
            threads (Optional[int], optional): Trials running at once. defaults to DEFAULT_SETTINGS.threads
            log_to_file (bool, optional): Add a ``logs/{time}.log`` sink. defaults to True
        """
        self.builders = {name: builder(threads=threads) for name, builder in EXPERIMENT_BUILDERS.items()}
        if log_to_file:
            logger.add(sink='logs/{time}.log')

    async def report(self, experiment: str, params: Optional[Mapping[str, Any]] = None) -> ExperimentReport:
        """Run an experiment and return its report without writing it

        Args:
            experiment (str): Experiment id, e.g. hyperoctahedral.
            params (Optional[Mapping[str, Any]], optional): Parameter overrides. defaults to None

        Returns:
            ExperimentReport: The report.
        """
        if experiment not in self.builders:
            raise ValueError(f"Unknown experiment {experiment!r}; choose from {sorted(self.builders)}")
        return await self.builders[experiment].build_report(params)

    async def run(self, experiment: str, params: Optional[Mapping[str, Any]], output_dir: str) -> str:
        """Run an experiment and save its report

        Args:
            experiment (str): Experiment id.
            params (Optional[Mapping[str, Any]]): Parameter overrides.
            output_dir (str): The directory to write the report to

        Returns:
            str: Path of the saved report.
        """
        report = await self.report(experiment, params)
        run_root = osp.join(output_dir, str(uuid.uuid4()))
        os.makedirs(run_root)
        report_file = osp.join(run_root, f"{experiment}.json")
        with open(report_file, 'w') as f:
            f.write(dump_report(report))
        logger.info(f"Report saved to: {report_file}")
        return report_file
