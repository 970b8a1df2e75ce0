"""Use case pour résoudre une instance avec la méthode configurée."""

import time
from typing import Optional

from app.application.algorithms.branch_and_cut import branch_and_cut
from app.application.algorithms.common import finalize, to_status
from app.application.algorithms.cutting_plane import cutting_plane
from app.application.algorithms.greedy import greedy_family
from app.application.algorithms.oracle import brute_force
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.services.bounds import build_bound_table
from app.domain.value_objects.exact_result import ExactResult
from app.domain.value_objects.solve_config import Method, SolveConfig
from app.infrastructure.masters.builders import build_milp_baseline
from app.infrastructure.solvers.base import SolveLimits, SolverBackend
from app.infrastructure.solvers.factory import create_backend

logger = get_logger(__name__)


def solve_milp(inst: Instance, cfg: SolveConfig, backend: SolverBackend) -> ExactResult:
    """Résoudre la formulation MILP complète en une seule passe."""
    start = time.perf_counter()
    bounds = build_bound_table(inst, cfg.bound_mode)
    model = build_milp_baseline(inst, bounds, backend, cfg.linearization, cfg.dump_model)
    solution = model.solve(SolveLimits(time_limit=cfg.time_limit, gap=cfg.epsilon, threads=cfg.threads))
    x = solution.x if solution.has_incumbent() else tuple([0] * inst.m)
    return finalize(
        inst,
        "milp",
        to_status(solution.status),
        x,
        solution.bound,
        start,
        time.perf_counter(),
        iterations=1,
        nodes=solution.nodes,
    )


def solve_milp_relaxation(inst: Instance, cfg: SolveConfig, backend: SolverBackend) -> Optional[float]:
    """Valeur de la relaxation continue du MILP (forme G), pour comparer les linéarisations."""
    bounds = build_bound_table(inst, cfg.bound_mode)
    model = build_milp_baseline(inst, bounds, backend, cfg.linearization)
    solution = model.solve(SolveLimits(time_limit=cfg.time_limit, threads=cfg.threads, relax=True))
    return solution.objective


class SolveInstanceUseCase:
    """Use case de résolution : aiguillage vers la méthode demandée."""

    def __init__(self, backend: Optional[SolverBackend] = None, backend_name: Optional[str] = None) -> None:
        """Initialiser le use case (backend créé à la demande)."""
        self._backend = backend
        self._backend_name = backend_name

    @property
    def backend(self) -> SolverBackend:
        if self._backend is None:
            self._backend = create_backend(self._backend_name)
        return self._backend

    def execute(self, inst: Instance, cfg: SolveConfig) -> ExactResult:
        """
        Résoudre une instance.

        Args:
            inst: Instance
            cfg: Configuration de résolution

        Returns:
            Résultat de la méthode
        """
        logger.info(
            "Début résolution",
            method=cfg.method.value,
            master=cfg.master.value,
            cuts=cfg.cuts.value,
            segments=cfg.segments,
            n=inst.n,
            m=inst.m,
        )
        if cfg.method is Method.GREEDY:
            result = greedy_family(inst)
        elif cfg.method is Method.BRUTE:
            result = brute_force(inst)
        elif cfg.method is Method.CP:
            result = cutting_plane(inst, cfg, self.backend)
        elif cfg.method is Method.BC:
            result = branch_and_cut(inst, cfg, self.backend)
        else:
            result = solve_milp(inst, cfg, self.backend)
        logger.info("Résolution terminée", status=result.status.value, objective=result.objective)
        return result


def solve_instance(inst: Instance, cfg: SolveConfig, backend: Optional[SolverBackend] = None) -> ExactResult:
    """Raccourci fonctionnel de SolveInstanceUseCase."""
    return SolveInstanceUseCase(backend).execute(inst, cfg)
