"""Bornes conditionnelles φ_ij(b) = min {Φ_i(x) : x ∈ X, x_j = b}."""

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, linprog, milp

from app.core.exceptions import ConditionallyInfeasibleError, InstanceError
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.value_objects.bound_table import BoundMode, BoundTable

logger = get_logger(__name__)


def resolve_mode(inst: Instance, mode: BoundMode | str) -> BoundMode:
    """Résoudre le mode auto : exact si le tri glouton suffit, relaxé sinon."""
    mode = BoundMode(mode)
    if mode is not BoundMode.AUTO:
        return mode
    if inst.is_unconstrained() or inst.cardinality_only() is not None:
        return BoundMode.EXACT
    return BoundMode.RELAXED


def can_include(inst: Instance, j: int) -> bool:
    """
    Vérifier que x_j = 1 est réalisable.

    Les coefficients étant positifs, le vecteur e_j est l'assortiment contenant j
    qui consomme le moins de chaque ressource.
    """
    if not inst.constraints:
        return True
    return bool(np.all(inst.beta_matrix[:, j] <= inst.alpha_vector + 1e-9))


def _greedy_capacity(inst: Instance) -> int | None:
    """Capacité C si le maximum s'obtient par tri (cardinalité seule ou aucune contrainte)."""
    if inst.is_unconstrained():
        return inst.m
    return inst.cardinality_only()


def _sorted_row(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Rang de chaque produit et sommes préfixes des valeurs triées par ordre décroissant."""
    order = np.argsort(-values, kind="stable")
    rank = np.empty(values.shape[0], dtype=int)
    rank[order] = np.arange(values.shape[0])
    prefix = np.concatenate(([0.0], np.cumsum(values[order])))
    return rank, prefix


def _top_excluding(values: np.ndarray, rank: np.ndarray, prefix: np.ndarray, j: int, k: int) -> float:
    """Somme des k plus grandes valeurs hors produit j."""
    m = values.shape[0]
    k = max(0, min(k, m - 1))
    if rank[j] < k:
        return float(prefix[min(k + 1, m)] - values[j])
    return float(prefix[k])


def _max_attraction_sorted(inst: Instance, i: int, j: int, b: int, capacity: int) -> float:
    values = inst.v_matrix[i]
    rank, prefix = _sorted_row(values)
    if b == 1:
        return float(values[j]) + _top_excluding(values, rank, prefix, j, capacity - 1)
    return _top_excluding(values, rank, prefix, j, capacity)


def _variable_bounds(inst: Instance, j: int, b: int) -> tuple[np.ndarray, np.ndarray]:
    lower = np.zeros(inst.m)
    upper = np.ones(inst.m)
    lower[j] = upper[j] = float(b)
    return lower, upper


def _max_attraction_lp(inst: Instance, i: int, j: int, b: int) -> float:
    lower, upper = _variable_bounds(inst, j, b)
    result = linprog(
        -inst.v_matrix[i],
        A_ub=inst.beta_matrix,
        b_ub=inst.alpha_vector,
        bounds=list(zip(lower, upper)),
        method="highs",
    )
    if result.status != 0:
        raise ConditionallyInfeasibleError(
            f"Relaxation infaisable pour x_{j} = {b}", product=j, value=b
        )
    return float(-result.fun)


def _max_attraction_milp(inst: Instance, i: int, j: int, b: int) -> float:
    lower, upper = _variable_bounds(inst, j, b)
    result = milp(
        -inst.v_matrix[i],
        constraints=[LinearConstraint(inst.beta_matrix, -np.inf, inst.alpha_vector)],
        bounds=Bounds(lower, upper),
        integrality=np.ones(inst.m),
        options={"mip_rel_gap": 0.0},
    )
    if result.status != 0 or result.x is None:
        raise ConditionallyInfeasibleError(
            f"Problème entier infaisable pour x_{j} = {b}", product=j, value=b
        )
    return float(-result.fun)


def conditional_bound(
    inst: Instance, i: int, j: int, b: int, mode: BoundMode | str = BoundMode.AUTO
) -> float:
    """
    Calculer φ_ij(b) = 1 / (v_i0 + M) avec M le maximum de Σ_j' v_ij' x_j' sur X ∩ {x_j = b}.

    Args:
        inst: Instance
        i: Classe de clients
        j: Produit conditionné
        b: Valeur imposée à x_j (0 ou 1)
        mode: exact (maximum entier) ou relaxed (maximum de la relaxation LP)

    Returns:
        Borne inférieure de Φ_i sur les assortiments réalisables avec x_j = b

    Raises:
        InstanceError: Si un indice est hors bornes
        ConditionallyInfeasibleError: Si aucun assortiment réalisable ne vérifie x_j = b
    """
    if not 0 <= i < inst.n or not 0 <= j < inst.m or b not in (0, 1):
        raise InstanceError("Indices de borne conditionnelle invalides", {"i": i, "j": j, "b": b})
    if b == 1 and not can_include(inst, j):
        raise ConditionallyInfeasibleError(
            f"Le produit {j} ne peut figurer dans aucun assortiment réalisable", product=j, value=1
        )

    mode = resolve_mode(inst, mode)
    capacity = _greedy_capacity(inst)
    if capacity is not None and mode is BoundMode.EXACT:
        attraction = _max_attraction_sorted(inst, i, j, b, capacity)
    elif mode is BoundMode.EXACT:
        attraction = _max_attraction_milp(inst, i, j, b)
    else:
        attraction = _max_attraction_lp(inst, i, j, b)
    return 1.0 / (inst.v0_array[i] + attraction)


def _sorted_table(inst: Instance, capacity: int) -> tuple[np.ndarray, np.ndarray]:
    """Table complète par tri, en O(n m log m)."""
    phi1 = np.empty((inst.n, inst.m))
    phi0 = np.empty((inst.n, inst.m))
    for i in range(inst.n):
        values = inst.v_matrix[i]
        rank, prefix = _sorted_row(values)
        for j in range(inst.m):
            with_j = values[j] + _top_excluding(values, rank, prefix, j, capacity - 1)
            without_j = _top_excluding(values, rank, prefix, j, capacity)
            phi1[i, j] = 1.0 / (inst.v0_array[i] + with_j)
            phi0[i, j] = 1.0 / (inst.v0_array[i] + without_j)
    return phi1, phi0


def _compute_table(inst: Instance, mode: BoundMode) -> BoundTable:
    fixed_zero = tuple(j for j in range(inst.m) if not can_include(inst, j))
    for j in fixed_zero:
        logger.warning("Produit exclu: inclusion infaisable", product=j)

    capacity = _greedy_capacity(inst)
    if capacity is not None and mode is BoundMode.EXACT:
        phi1, phi0 = _sorted_table(inst, capacity)
    else:
        phi1 = np.empty((inst.n, inst.m))
        phi0 = np.empty((inst.n, inst.m))
        for i in range(inst.n):
            for j in range(inst.m):
                phi0[i, j] = conditional_bound(inst, i, j, 0, mode)
                if j not in fixed_zero:
                    phi1[i, j] = conditional_bound(inst, i, j, 1, mode)

    # x_j est fixé à 0 : toute borne valide de Φ_i convient pour φ_ij(1)
    floor = 1.0 / (inst.v0_array + inst.v_matrix.sum(axis=1))
    for j in fixed_zero:
        phi1[:, j] = floor

    logger.debug("Table de bornes calculée", mode=mode.value, n=inst.n, m=inst.m)
    return BoundTable(
        phi1=tuple(tuple(float(x) for x in row) for row in phi1),
        phi0=tuple(tuple(float(x) for x in row) for row in phi0),
        method=mode,
        fixed_zero=fixed_zero,
    )


def build_bound_table(inst: Instance, mode: BoundMode | str = BoundMode.AUTO) -> BoundTable:
    """
    Calculer φ_ij(0) et φ_ij(1) pour toutes les paires, avec cache par instance.

    Les produits dont l'inclusion est infaisable sont listés dans fixed_zero ;
    les constructeurs de maîtres les fixent à 0.
    """
    resolved = resolve_mode(inst, mode)
    return inst.memo(f"bounds:{resolved.value}", lambda: _compute_table(inst, resolved))
