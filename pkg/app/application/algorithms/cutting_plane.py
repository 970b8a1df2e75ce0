"""Algorithme de plan coupant : maître relâché, séparation au candidat, itération."""

import time

import numpy as np

from app.application.algorithms.common import build_master, finalize, relative_gap, to_status
from app.application.algorithms.greedy import greedy_family
from app.application.algorithms.separation import initial_cuts, partition_for, separate, violated_targets
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.services.choice_model import eval_min_objective
from app.domain.value_objects.exact_result import ExactResult, SolveStatus
from app.domain.value_objects.solve_config import SolveConfig
from app.infrastructure.solvers.base import MasterStatus, SolveLimits, SolverBackend

logger = get_logger(__name__)

MASTER_GAP = 1e-9


def cutting_plane(inst: Instance, cfg: SolveConfig, backend: SolverBackend) -> ExactResult:
    """
    Résoudre max F par plan coupant.

    Départ glouton, coupes initiales au point glouton et en 0, puis à chaque
    itération : résolution du maître, arrêt si toutes les cibles vérifient
    aux ≥ valeur vraie − ε ou si l'écart relatif est ≤ ε, sinon ajout des coupes.

    Args:
        inst: Instance
        cfg: Configuration (maître, coupes, segments, ε, limite de temps)
        backend: Backend MILP

    Returns:
        ExactResult optimal, ou feasible-limit avec le meilleur assortiment et la borne
    """
    start = time.perf_counter()
    deadline = start + cfg.time_limit
    part = partition_for(inst, cfg)
    kinds = cfg.cuts.kinds()

    greedy = greedy_family(inst)
    best_x = np.asarray(greedy.x, dtype=int)
    best_g = eval_min_objective(inst, best_x)

    master, used_kind = build_master(inst, cfg, backend, part)
    master.add_cuts(initial_cuts(inst, [best_x, np.zeros(inst.m, dtype=int)], kinds, part))
    if cfg.warm_start:
        master.set_start(best_x)

    lower = -np.inf
    history: list[float] = []
    status = SolveStatus.FEASIBLE_LIMIT
    message = None
    iteration = 0
    while iteration < cfg.max_iterations:
        remaining = deadline - time.perf_counter()
        if remaining <= 0:
            message = "limite de temps atteinte"
            break
        iteration += 1
        limits = SolveLimits(time_limit=remaining, gap=MASTER_GAP, threads=cfg.threads)
        solution = master.solve(limits)

        if solution.status in (MasterStatus.INFEASIBLE, MasterStatus.ERROR):
            status = to_status(solution.status)
            message = f"maître {solution.status.value} à l'itération {iteration}"
            break
        bound = solution.bound if solution.bound is not None else solution.objective
        if bound is not None:
            history.append(float(bound))
            lower = max(lower, float(bound))
        if not solution.has_incumbent():
            message = "maître interrompu sans solution"
            break

        x_bar = np.asarray(solution.x, dtype=int)
        g_bar = eval_min_objective(inst, x_bar)
        if g_bar < best_g:
            best_x, best_g = x_bar, g_bar

        if solution.status is MasterStatus.FEASIBLE_LIMIT:
            message = "limite de temps atteinte pendant le maître"
            break

        converged = not violated_targets(inst, x_bar, solution.aux, part, cfg.epsilon)
        gap = relative_gap(best_g, lower)
        logger.info(
            "Itération du plan coupant",
            iteration=iteration,
            bound=lower,
            incumbent=best_g,
            gap=gap,
            cuts=master.cuts_added,
        )
        if converged or (gap is not None and gap <= cfg.epsilon):
            status = SolveStatus.OPTIMAL
            break

        cuts = separate(inst, x_bar, solution.aux, kinds, part, cfg.cut_tolerance, cfg.cut_selection)
        if master.add_cuts(cuts) == 0:
            # Candidat déjà coupé : écart résiduel de l'ordre des tolérances du solveur
            logger.warning("Aucune nouvelle coupe, arrêt sur tolérance", iteration=iteration)
            status = SolveStatus.OPTIMAL
            break
    else:
        message = "nombre maximal d'itérations atteint"

    result = finalize(
        inst,
        "cp",
        status,
        best_x,
        None if not np.isfinite(lower) else lower,
        start,
        time.perf_counter(),
        iterations=iteration,
        cuts_added=master.cuts_added,
        bound_history=history,
        message=message,
    )
    logger.info(
        "Plan coupant terminé",
        status=result.status.value,
        objective=result.objective,
        iterations=iteration,
        master=used_kind.value,
        segments=cfg.segments,
    )
    return result
