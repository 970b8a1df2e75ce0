"""Heuristique gloutonne emboîtée et sa garantie d'approximation."""

import math
import time
from typing import Optional

import numpy as np

from app.core.exceptions import ConfigurationError
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.services.choice_model import eval_min_objective, eval_revenue, is_feasible, revenue_range
from app.domain.value_objects.exact_result import ExactResult, SolveStatus

logger = get_logger(__name__)

E_FACTOR = 1.0 - 1.0 / math.e


def greedy_order(inst: Instance, r: int) -> list[int]:
    """
    Ordre d'insertion du glouton sur l'objectif à prix unitaires.

    À chaque pas, le produit de plus grand gain marginal ρ_i v_i0 (1/Ψ_i − 1/(Ψ_i + v_ij))
    est ajouté ; à égalité, le plus petit indice l'emporte. Ψ_i est mis à jour
    incrémentalement.
    """
    if not 0 <= r <= inst.m:
        raise ConfigurationError(f"r doit être dans [0, {inst.m}]", {"r": r})
    psi = inst.v0_array.copy()
    weights = inst.rho_array * inst.v0_array
    chosen = np.zeros(inst.m, dtype=bool)
    order: list[int] = []
    for _ in range(r):
        gains = weights @ (1.0 / psi[:, None] - 1.0 / (psi[:, None] + inst.v_matrix))
        gains[chosen] = -np.inf
        j = int(np.argmax(gains))
        chosen[j] = True
        order.append(j)
        psi += inst.v_matrix[:, j]
    return order


def greedy_unit(inst: Instance, r: int) -> list[int]:
    """Assortiment S_r du glouton emboîté (|S_r| = r), indices triés."""
    return sorted(greedy_order(inst, r))


def approximation_bound(inst: Instance) -> float:
    """Garantie (1 − 1/e)·r_min/r_max de la meilleure solution gloutonne."""
    r_min, r_max = revenue_range(inst)
    if r_max <= 0:
        return E_FACTOR
    return E_FACTOR * r_min / r_max


def greedy_family(inst: Instance, capacity: Optional[int] = None) -> ExactResult:
    """
    Évaluer F sur les préfixes S_1..S_C du glouton et renvoyer le meilleur.

    Args:
        inst: Instance
        capacity: Cardinalité maximale ; déduite de l'instance si absente

    Returns:
        ExactResult au statut heuristic ; ratio_bound est absent pour des
        contraintes générales (les préfixes sont alors filtrés par faisabilité)
    """
    start = time.perf_counter()
    cardinality = inst.cardinality_only()
    general = cardinality is None and not inst.is_unconstrained()
    if capacity is None:
        capacity = inst.m if cardinality is None else cardinality
    capacity = max(0, min(capacity, inst.m))

    order = greedy_order(inst, capacity)
    best_x = np.zeros(inst.m, dtype=int)
    best_value = 0.0
    evaluated = 0
    x = np.zeros(inst.m, dtype=int)
    for j in order:
        x[j] = 1
        if general and not is_feasible(inst, x):
            break
        evaluated += 1
        value = eval_revenue(inst, x)
        if value > best_value + 1e-12:
            best_value, best_x = value, x.copy()

    ratio = None if general else approximation_bound(inst)
    logger.debug("Glouton terminé", prefixes=evaluated, value=best_value, ratio=ratio)
    return ExactResult(
        method="greedy",
        status=SolveStatus.HEURISTIC,
        x=tuple(int(v) for v in best_x),
        objective=best_value,
        g_value=eval_min_objective(inst, best_x),
        iterations=evaluated,
        wall_time=time.perf_counter() - start,
        ratio_bound=ratio,
    )
