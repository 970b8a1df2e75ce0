"""Évaluations du modèle MMNL : faisabilité, revenu F, objectif de minimisation G, Φ et Ψ."""

from typing import Sequence

import numpy as np

from app.core.exceptions import InstanceError
from app.domain.entities.instance import Instance

FEASIBILITY_TOL = 1e-9


def as_vector(inst: Instance, x: Sequence[float] | np.ndarray) -> np.ndarray:
    """
    Convertir un assortiment (binaire ou réel) en vecteur numpy de taille m.

    Raises:
        InstanceError: Si la dimension ne correspond pas à l'instance
    """
    vector = np.asarray(x, dtype=float).reshape(-1)
    if vector.shape[0] != inst.m:
        raise InstanceError(
            f"Dimension incohérente: {vector.shape[0]} entrées pour {inst.m} produits",
            {"expected": inst.m, "received": int(vector.shape[0])},
        )
    return vector


def as_binary(inst: Instance, x: Sequence[float] | np.ndarray) -> np.ndarray:
    """Convertir un assortiment en vecteur d'entiers 0/1 (arrondi des valeurs de solveur)."""
    vector = as_vector(inst, x)
    return (vector > 0.5).astype(int)


def subset_to_vector(inst: Instance, subset: Sequence[int]) -> np.ndarray:
    """Assortiment S (indices de produits) vers vecteur binaire."""
    x = np.zeros(inst.m, dtype=int)
    for j in subset:
        if not 0 <= j < inst.m:
            raise InstanceError(f"Produit hors bornes: {j}")
        x[j] = 1
    return x


def is_feasible(inst: Instance, x: Sequence[float] | np.ndarray) -> bool:
    """Vérifier toutes les contraintes Σ_j beta_kj x_j ≤ alpha_k."""
    vector = as_vector(inst, x)
    if not inst.constraints:
        return True
    usage = inst.beta_matrix @ vector
    return bool(np.all(usage <= inst.alpha_vector + FEASIBILITY_TOL))


def psi_vector(inst: Instance, x: Sequence[float] | np.ndarray) -> np.ndarray:
    """Ψ_i(x) = v_i0 + Σ_j v_ij x_j pour toutes les classes."""
    return inst.v0_array + inst.v_matrix @ as_vector(inst, x)


def phi_vector(inst: Instance, x: Sequence[float] | np.ndarray) -> np.ndarray:
    """Φ_i(x) = 1 / Ψ_i(x) pour toutes les classes."""
    return 1.0 / psi_vector(inst, x)


def _check_class(inst: Instance, i: int) -> None:
    if not 0 <= i < inst.n:
        raise InstanceError(f"Classe hors bornes: {i}", {"n": inst.n})


def eval_psi(inst: Instance, i: int, x: Sequence[float] | np.ndarray) -> float:
    """Ψ_i(x) pour une classe."""
    _check_class(inst, i)
    return float(inst.v0_array[i] + inst.v_matrix[i] @ as_vector(inst, x))


def eval_phi(inst: Instance, i: int, x: Sequence[float] | np.ndarray) -> float:
    """Φ_i(x) pour une classe ; accepte un x réel (relaxations, test de convexité)."""
    return 1.0 / eval_psi(inst, i, x)


def eval_revenue(inst: Instance, x: Sequence[float] | np.ndarray) -> float:
    """F(x) = Σ_i rho_i (Σ_j r_ij v_ij x_j) / (v_i0 + Σ_j v_ij x_j)."""
    vector = as_vector(inst, x)
    numerator = (inst.r_matrix * inst.v_matrix) @ vector
    return float(inst.rho_array @ (numerator / psi_vector(inst, vector)))


def eval_min_objective(inst: Instance, x: Sequence[float] | np.ndarray) -> float:
    """
    G(x) = Σ_i rho_i (Σ_j r'_ij v_ij x_j + r_i v_i0) / Ψ_i(x).

    Vérifie F(x) + G(x) = Σ_i rho_i r_i.
    """
    vector = as_vector(inst, x)
    numerator = (inst.r_shift * inst.v_matrix) @ vector + inst.r_max_class * inst.v0_array
    return float(inst.rho_array @ (numerator / psi_vector(inst, vector)))


def unit_revenue(inst: Instance, x: Sequence[float] | np.ndarray) -> float:
    """Revenu avec tous les prix à 1 : Σ_i rho_i (Σ_j v_ij x_j) / Ψ_i(x)."""
    vector = as_vector(inst, x)
    attraction = inst.v_matrix @ vector
    return float(inst.rho_array @ (attraction / (inst.v0_array + attraction)))


def revenue_range(inst: Instance) -> tuple[float, float]:
    """(r_min, r_max) sur toutes les paires (i, j)."""
    if inst.m == 0:
        return 0.0, 0.0
    return float(inst.r_matrix.min()), float(inst.r_matrix.max())
