"""Tâches de résolution asynchrone pour les campagnes de benchmark."""

import asyncio
import time
from typing import Callable, Optional

from pydantic import BaseModel, ConfigDict

from app.application.use_cases.solve_instance import SolveInstanceUseCase
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.value_objects.benchmark import BenchmarkRecord
from app.domain.value_objects.exact_result import ExactResult, SolveStatus
from app.domain.value_objects.solve_config import Method, SolveConfig
from app.infrastructure.storage.results_writer import ResultsWriter

logger = get_logger(__name__)


class SolveJob(BaseModel):
    """Une exécution (instance, configuration) d'une campagne."""

    model_config = ConfigDict(frozen=True)

    instance_id: str
    family: str
    v0: Optional[float] = None
    alpha: Optional[float] = None
    instance: Instance
    config: SolveConfig

    @property
    def key(self) -> str:
        cfg = self.config
        return f"{self.instance_id}|{cfg.method.value}|{cfg.master.value}|{cfg.cuts.value}|{cfg.segments}"


def record_for(job: SolveJob, result: ExactResult) -> BenchmarkRecord:
    """Ligne CSV d'une exécution terminée."""
    cfg = job.config
    exact = cfg.method in (Method.CP, Method.BC)
    return BenchmarkRecord(
        instance=job.instance_id,
        family=job.family,
        v0=job.v0,
        alpha=job.alpha,
        method=cfg.method.value,
        master=cfg.master.value if exact else "",
        cuts=cfg.cuts.value if exact else "",
        L=cfg.segments if exact else 0,
        status=result.status.value,
        objective=result.objective,
        bound=result.bound,
        gap=result.gap,
        time_s=round(result.wall_time, 6),
        iterations=result.iterations,
        nodes=result.nodes,
        cuts_added=result.cuts_added,
    )


def run_job(job: SolveJob, backend_name: Optional[str] = None) -> ExactResult:
    """Résoudre un job avec une session de backend qui lui est propre."""
    return SolveInstanceUseCase(backend_name=backend_name).execute(job.instance, job.config)


class AsyncSolveQueue:
    """Queue asynchrone pour les résolutions d'une campagne."""

    def __init__(self, max_concurrent: int = 2, backend_name: Optional[str] = None) -> None:
        """Initialiser la queue."""
        self.max_concurrent = max_concurrent
        self.backend_name = backend_name
        self.semaphore = asyncio.Semaphore(max_concurrent)
        self.tasks: list[asyncio.Task] = []

    async def process_job(
        self,
        job: SolveJob,
        writer: ResultsWriter,
        progress_callback: Callable[[str, str], None] | None = None,
    ) -> BenchmarkRecord:
        """
        Résoudre un job et écrire sa ligne.

        Un échec de résolution devient une ligne au statut error ; la campagne
        continue.

        Args:
            job: Exécution à lancer
            writer: Rédacteur du CSV (ajouts sérialisés)
            progress_callback: Appelé avec (clé du job, statut) en fin d'exécution
        """
        async with self.semaphore:
            start = time.perf_counter()
            loop = asyncio.get_running_loop()
            try:
                result = await loop.run_in_executor(None, run_job, job, self.backend_name)
            except Exception as e:
                logger.exception(f"Erreur lors de la résolution de {job.key}: {e}")
                result = ExactResult(
                    method=job.config.method.value,
                    status=SolveStatus.ERROR,
                    wall_time=time.perf_counter() - start,
                    message=str(e),
                )
            record = record_for(job, result)
            await writer.append(record)
            logger.info(
                "Exécution terminée",
                job=job.key,
                status=record.status,
                objective=record.objective,
                time_s=record.time_s,
            )
            if progress_callback:
                progress_callback(job.key, record.status)
            return record

    def add_task(
        self,
        job: SolveJob,
        writer: ResultsWriter,
        progress_callback: Callable[[str, str], None] | None = None,
    ) -> asyncio.Task:
        """Ajouter une tâche de résolution à la queue."""
        task = asyncio.create_task(self.process_job(job, writer, progress_callback))
        self.tasks.append(task)
        return task

    async def wait_all(self) -> list[BenchmarkRecord]:
        """Attendre toutes les tâches, dans l'ordre d'ajout."""
        records = [await task for task in self.tasks]
        self.tasks.clear()
        return records
