"""Oracle exhaustif : énumération de tous les assortiments réalisables."""

import time
from typing import Optional

import numpy as np

from app.config import get_settings
from app.core.exceptions import OracleLimitError
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.services.choice_model import FEASIBILITY_TOL, eval_min_objective
from app.domain.value_objects.exact_result import ExactResult, SolveStatus

logger = get_logger(__name__)

BLOCK_BITS = 12
TIE_TOL = 1e-12


def _gray_flip(k: int) -> int:
    """Bit modifié au pas k du code de Gray (bit de poids faible de k)."""
    return (k & -k).bit_length() - 1


def brute_force(inst: Instance, max_m: Optional[int] = None) -> ExactResult:
    """
    Calculer max_x F(x) par énumération.

    Les produits sont séparés en un bloc bas, précalculé en une fois (2^k lignes),
    et un bloc haut parcouru en code de Gray avec mise à jour incrémentale de Ψ.
    À égalité, le plus petit x dans l'ordre lexicographique est retenu.

    Raises:
        OracleLimitError: Si m dépasse la limite d'énumération
    """
    limit = get_settings().brute_force_max_m if max_m is None else max_m
    if inst.m > limit:
        raise OracleLimitError(
            f"Énumération refusée: m = {inst.m} dépasse la limite {limit}",
            {"m": inst.m, "limit": limit},
        )
    start = time.perf_counter()

    m = inst.m
    low = min(m, BLOCK_BITS)
    high = m - low
    v = inst.v_matrix
    rv = inst.r_matrix * inst.v_matrix
    beta = inst.beta_matrix
    alpha = inst.alpha_vector + FEASIBILITY_TOL

    # Bloc bas : produits high..m-1
    masks = np.arange(1 << low)
    low_bits = ((masks[:, None] >> np.arange(low)) & 1).astype(float)
    low_idx = np.arange(high, m)
    low_attr = low_bits @ v[:, low_idx].T
    low_num = low_bits @ rv[:, low_idx].T
    low_use = low_bits @ beta[:, low_idx].T

    attr = np.zeros(inst.n)
    num = np.zeros(inst.n)
    use = np.zeros(beta.shape[0])
    high_x = np.zeros(high, dtype=int)

    best_value = -np.inf
    best_x: tuple[int, ...] = tuple([0] * m)
    for k in range(1 << high):
        if k > 0:
            j = _gray_flip(k)
            sign = 1.0 - 2.0 * high_x[j]
            high_x[j] = 1 - high_x[j]
            attr += sign * v[:, j]
            num += sign * rv[:, j]
            use += sign * beta[:, j]

        values = ((num + low_num) / (inst.v0_array + attr + low_attr)) @ inst.rho_array
        if beta.shape[0]:
            values[~np.all(use + low_use <= alpha, axis=1)] = -np.inf
        top = values.max()
        if top < best_value - TIE_TOL * max(1.0, abs(best_value)):
            continue
        for row in np.flatnonzero(values >= top - TIE_TOL * max(1.0, abs(top))):
            candidate = tuple(int(b) for b in high_x) + tuple(int(b) for b in low_bits[row])
            value = float(values[row])
            scale = TIE_TOL * max(1.0, abs(value), abs(best_value) if np.isfinite(best_value) else 1.0)
            if value > best_value + scale or (abs(value - best_value) <= scale and candidate < best_x):
                best_value, best_x = value, candidate

    best_value = max(best_value, 0.0)
    logger.debug("Énumération terminée", m=m, subsets=1 << m, value=best_value)
    return ExactResult(
        method="brute",
        status=SolveStatus.OPTIMAL,
        x=best_x,
        objective=best_value,
        g_value=eval_min_objective(inst, best_x) if m else inst.constant_revenue,
        bound=best_value,
        gap=0.0,
        iterations=1 << m,
        wall_time=time.perf_counter() - start,
    )
