"""Value object pour la table des bornes conditionnelles φ_ij(b)."""

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class BoundMode(str, Enum):
    """Mode de calcul du maximum Σ_j v_ij x_j sous conditionnement."""

    EXACT = "exact"
    RELAXED = "relaxed"
    AUTO = "auto"


class BoundTable(BaseModel):
    """Bornes φ_ij(1) et φ_ij(0) pour toutes les paires (i, j)."""

    model_config = ConfigDict(frozen=True)

    phi1: tuple[tuple[float, ...], ...] = Field(..., description="φ_ij(1)")
    phi0: tuple[tuple[float, ...], ...] = Field(..., description="φ_ij(0)")
    method: BoundMode = Field(..., description="exact ou relaxed")
    fixed_zero: tuple[int, ...] = Field(
        default=(),
        description="Produits dont l'inclusion rend le problème infaisable",
    )

    def phi1_matrix(self) -> np.ndarray:
        return np.asarray(self.phi1, dtype=float)

    def phi0_matrix(self) -> np.ndarray:
        return np.asarray(self.phi0, dtype=float)
