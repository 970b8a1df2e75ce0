"""Schemas pour la résolution et la validation."""

from typing import Optional

from pydantic import BaseModel, Field

from app.domain.entities.instance import Instance
from app.domain.value_objects.solve_config import SolveConfig


class SolveRequest(BaseModel):
    """Schéma de requête pour une résolution."""

    instance: Instance
    config: SolveConfig = Field(default_factory=SolveConfig)
    normalize_rho: bool = Field(default=False, description="Renormaliser rho à une somme de 1")


class ValidateRequest(BaseModel):
    """Schéma de requête pour la validation d'une solution."""

    instance: Instance
    x: list[float] = Field(..., description="Assortiment annoncé")
    objective: Optional[float] = Field(None, description="Valeur de F annoncée")
