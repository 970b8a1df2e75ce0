"""Branch-and-cut : une seule résolution du maître avec séparation paresseuse."""

import time

import numpy as np

from app.application.algorithms.common import build_master, finalize, to_status
from app.application.algorithms.greedy import greedy_family
from app.application.algorithms.separation import LazySeparator, initial_cuts, partition_for, separate
from app.core.exceptions import LazyUnsupportedError
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.services.choice_model import eval_min_objective
from app.domain.value_objects.exact_result import ExactResult, SolveStatus
from app.domain.value_objects.solve_config import SolveConfig
from app.infrastructure.masters.builders import add_relation_rows
from app.infrastructure.solvers.base import MasterStatus, SolveLimits, SolverBackend

logger = get_logger(__name__)

ACCEPTANCE_ROUNDS = 20


def branch_and_cut(inst: Instance, cfg: SolveConfig, backend: SolverBackend) -> ExactResult:
    """
    Résoudre max F par branch-and-cut.

    Les coupes sont ajoutées paresseusement à chaque candidat entier dont une
    cible est sous-estimée de plus de cfg.cut_tolerance. Le candidat final est
    re-séparé : les coupes violées deviennent des lignes du modèle et le maître
    est résolu de nouveau.

    Raises:
        LazyUnsupportedError: Si le backend ne fournit pas de callback paresseux
    """
    if not backend.capabilities.lazy_constraints:
        raise LazyUnsupportedError(
            f"Le backend {backend.name} ne gère pas les contraintes paresseuses; utilisez --method cp",
            {"backend": backend.name},
        )
    start = time.perf_counter()
    deadline = start + cfg.time_limit
    part = partition_for(inst, cfg)
    kinds = cfg.cuts.kinds()

    greedy = greedy_family(inst)
    best_x = np.asarray(greedy.x, dtype=int)
    best_g = eval_min_objective(inst, best_x)

    master, used_kind = build_master(inst, cfg, backend, part)
    if cfg.strengthen:
        if used_kind.value == "bi" and not backend.capabilities.bilinear_constraints:
            logger.warning("Renforcement bilinéaire non supporté, ignoré", backend=backend.name)
        else:
            add_relation_rows(master)
    master.add_cuts(initial_cuts(inst, [best_x, np.zeros(inst.m, dtype=int)], kinds, part))
    if cfg.warm_start:
        master.set_start(best_x)

    separator = LazySeparator(inst, master, kinds, part, cfg.cut_tolerance)
    status = SolveStatus.FEASIBLE_LIMIT
    g_bound = None
    nodes = None
    message = None
    rounds = 0
    while rounds < ACCEPTANCE_ROUNDS:
        remaining = deadline - time.perf_counter()
        if remaining <= 0:
            message = "limite de temps atteinte"
            break
        rounds += 1
        limits = SolveLimits(time_limit=remaining, gap=cfg.epsilon, threads=cfg.threads)
        solution = master.solve(limits, separator)
        nodes = solution.nodes if nodes is None else nodes + (solution.nodes or 0)

        if solution.status in (MasterStatus.INFEASIBLE, MasterStatus.ERROR):
            status = to_status(solution.status)
            message = f"maître {solution.status.value}"
            break
        if solution.bound is not None:
            g_bound = solution.bound if g_bound is None else max(g_bound, solution.bound)
        if not solution.has_incumbent():
            message = "aucun candidat accepté avant la limite"
            break

        x_bar = np.asarray(solution.x, dtype=int)
        g_bar = eval_min_objective(inst, x_bar)
        if g_bar < best_g:
            best_x, best_g = x_bar, g_bar

        # Contrôle d'acceptation du candidat renvoyé
        missed = separate(inst, x_bar, solution.aux, kinds, part, cfg.cut_tolerance)
        if missed and master.add_cuts(missed) > 0:
            logger.warning("Candidat final non séparé, nouvelle résolution", round=rounds, cuts=len(missed))
            continue
        status = to_status(solution.status)
        break
    else:
        message = "nombre maximal de vérifications atteint"

    result = finalize(
        inst,
        "bc",
        status,
        best_x,
        g_bound,
        start,
        time.perf_counter(),
        iterations=rounds,
        nodes=nodes,
        cuts_added=master.cuts_added + separator.cuts_emitted,
        message=message,
    )
    logger.info(
        "Branch-and-cut terminé",
        status=result.status.value,
        objective=result.objective,
        lazy_calls=separator.calls,
        lazy_cuts=separator.cuts_emitted,
        master=used_kind.value,
    )
    return result
