"""Pipeline des campagnes : benchmark, balayage de L et expérience de ratio."""

from pathlib import Path
from typing import Any, Callable, Iterable, Optional, Sequence

import numpy as np
import pandas as pd

from app.application.algorithms.greedy import approximation_bound, greedy_family
from app.application.algorithms.oracle import brute_force
from app.config import get_settings
from app.core.logging import get_logger
from app.domain.value_objects.benchmark import CSV_COLUMNS, BenchmarkRecord
from app.domain.value_objects.exact_result import SolveStatus
from app.domain.value_objects.solve_config import Method, SolveConfig
from app.infrastructure.generators.instance_generator import GeneratedInstance, generate_ratio_instance
from app.infrastructure.storage.results_writer import ResultsWriter, write_frame
from app.workers.tasks.benchmark_tasks import AsyncSolveQueue, SolveJob

logger = get_logger(__name__)

DEFAULT_SEGMENTS = (1, 5, 10, 20, 50, 100, 200)
SOLVED_STATUSES = (SolveStatus.OPTIMAL.value, SolveStatus.HEURISTIC.value)
CELL_KEYS = ["family", "v0", "alpha", "method", "master", "cuts", "L"]


def records_frame(records: Iterable[BenchmarkRecord]) -> pd.DataFrame:
    """Tableau des lignes brutes, colonnes dans l'ordre du CSV."""
    return pd.DataFrame([r.model_dump() for r in records], columns=list(CSV_COLUMNS))


def summarize(frame: pd.DataFrame) -> pd.DataFrame:
    """
    Agréger par cellule (famille, v0, alpha, configuration).

    Returns:
        Colonnes CELL_KEYS + instances, solved, mean_time_s ; le temps moyen
        n'est calculé que sur les instances résolues (NaN si aucune)
    """
    columns = CELL_KEYS + ["instances", "solved", "mean_time_s"]
    if frame.empty:
        return pd.DataFrame(columns=columns)
    frame = frame.assign(
        solved=frame["status"].isin(SOLVED_STATUSES),
        solved_time=frame["time_s"].where(frame["status"].isin(SOLVED_STATUSES)),
    )
    summary = (
        frame.groupby(CELL_KEYS, dropna=False, sort=False)
        .agg(
            instances=("instance", "count"),
            solved=("solved", "sum"),
            mean_time_s=("solved_time", "mean"),
        )
        .reset_index()
    )
    summary["solved"] = summary["solved"].astype(int)
    return summary[columns]


def pivot_segments(frame: pd.DataFrame) -> pd.DataFrame:
    """Temps moyen (résolues seulement) par méthode × L."""
    if frame.empty:
        return pd.DataFrame()
    solved = frame[frame["status"].isin(SOLVED_STATUSES)]
    return solved.pivot_table(index="method", columns="L", values="time_s", aggfunc="mean")


def companion_path(path: Path, suffix: str) -> Path:
    """Fichier voisin : results.csv -> results_<suffix>.csv."""
    return path.with_name(f"{path.stem}_{suffix}{path.suffix or '.csv'}")


class BenchmarkPipeline:
    """Lancer des exécutions en parallèle et produire les CSV de résultats."""

    def __init__(
        self,
        workers: Optional[int] = None,
        backend_name: Optional[str] = None,
        logger: Any = None,
    ) -> None:
        """Initialiser le pipeline."""
        self.workers = workers or get_settings().benchmark_workers
        self.backend_name = backend_name
        self.logger = logger or get_logger(__name__)

    async def run_jobs(
        self,
        jobs: Sequence[SolveJob],
        out_path: Path | str,
        progress_callback: Callable[[str, str], None] | None = None,
    ) -> list[BenchmarkRecord]:
        """
        Exécuter des jobs et écrire une ligne par job.

        Args:
            jobs: Exécutions à lancer
            out_path: CSV des lignes brutes (écrasé)
            progress_callback: Callback de progression

        Returns:
            Lignes dans l'ordre des jobs
        """
        writer = ResultsWriter(out_path)
        await writer.open()
        queue = AsyncSolveQueue(max_concurrent=self.workers, backend_name=self.backend_name)
        for job in jobs:
            queue.add_task(job, writer, progress_callback)
        records = await queue.wait_all()
        self.logger.info("Campagne terminée", jobs=len(jobs), rows=writer.rows_written, path=str(out_path))
        return records

    async def run_benchmark(
        self,
        instances: Sequence[GeneratedInstance],
        configs: Sequence[SolveConfig],
        out_path: Path | str,
        time_limit: Optional[float] = None,
    ) -> tuple[list[BenchmarkRecord], pd.DataFrame]:
        """
        Résoudre chaque instance avec chaque configuration.

        Le tableau agrégé est écrit à côté des lignes brutes (<nom>_summary.csv).

        Returns:
            Lignes brutes et tableau agrégé
        """
        if time_limit is not None:
            configs = [cfg.model_copy(update={"time_limit": time_limit}) for cfg in configs]
        jobs = [_job(item, cfg) for item in instances for cfg in configs]
        records = await self.run_jobs(jobs, out_path)
        summary = summarize(records_frame(records))
        write_frame(summary, companion_path(Path(out_path), "summary"))
        return records, summary

    async def sweep_segments(
        self,
        instances: Sequence[GeneratedInstance],
        out_path: Path | str,
        segments: Optional[Sequence[int]] = None,
        base: Optional[SolveConfig] = None,
        methods: Sequence[Method] = (Method.CP, Method.BC),
    ) -> tuple[list[BenchmarkRecord], pd.DataFrame]:
        """
        Résoudre avec des maîtres par segments pour plusieurs valeurs de L.

        Les valeurs L > n sont ignorées pour l'instance concernée. Le tableau
        méthode × L est écrit à côté des lignes brutes (<nom>_pivot.csv).
        """
        base = base or SolveConfig()
        values = sorted(set(segments or DEFAULT_SEGMENTS))
        jobs = [
            _job(item, base.model_copy(update={"method": method, "segments": L}))
            for item in instances
            for method in methods
            for L in values
            if L <= item.instance.n
        ]
        records = await self.run_jobs(jobs, out_path)
        pivot = pivot_segments(records_frame(records))
        path = companion_path(Path(out_path), "pivot")
        path.parent.mkdir(parents=True, exist_ok=True)
        pivot.to_csv(path)
        return records, pivot


def _job(item: GeneratedInstance, cfg: SolveConfig) -> SolveJob:
    return SolveJob(
        instance_id=item.instance_id,
        family=item.family,
        v0=item.v0,
        alpha=item.alpha,
        instance=item.instance,
        config=cfg,
    )


def ratio_experiment(
    count: int,
    seed: int,
    n: int = 5,
    m: int = 12,
    capacity: int = 4,
    ratio_range: tuple[float, float] = (0.25, 0.9),
    out_path: Optional[Path | str] = None,
) -> pd.DataFrame:
    """
    Comparer le ratio glouton / optimum à la garantie théorique.

    Chaque instance tire r_min/r_max dans ratio_range ; l'optimum vient de
    l'énumération exhaustive.

    Returns:
        Colonnes instance, revenue_ratio, greedy, optimum, ratio, bound
    """
    rng = np.random.default_rng(seed)
    rows = []
    for k in range(count):
        revenue_ratio = float(rng.uniform(*ratio_range))
        inst = generate_ratio_instance(n, m, revenue_ratio, capacity, rng)
        greedy = greedy_family(inst)
        optimum = brute_force(inst)
        ratio = greedy.objective / optimum.objective if optimum.objective else 1.0
        rows.append(
            {
                "instance": f"ratio_{seed}_{k:03d}",
                "revenue_ratio": revenue_ratio,
                "greedy": greedy.objective,
                "optimum": optimum.objective,
                "ratio": ratio,
                "bound": approximation_bound(inst),
            }
        )
    frame = pd.DataFrame(rows, columns=["instance", "revenue_ratio", "greedy", "optimum", "ratio", "bound"])
    if not frame.empty:
        logger.info(
            "Expérience de ratio terminée",
            instances=len(frame),
            median_ratio=float(frame["ratio"].median()),
            min_margin=float((frame["ratio"] - frame["bound"]).min()),
        )
    if out_path is not None:
        write_frame(frame, out_path)
    return frame
