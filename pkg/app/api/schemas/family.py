"""Schemas pour les familles d'instances."""

from typing import Any, Optional

from pydantic import BaseModel, Field


class GenerateRequest(BaseModel):
    """Schéma de requête pour générer une instance d'une famille."""

    seed: int = Field(default=0, ge=0)
    v0: Optional[float] = Field(None, description="Cellule v0 (première par défaut)")
    alpha: Optional[float] = Field(None, description="Cellule de capacité (première par défaut)")
    k: int = Field(default=0, ge=0, description="Rang dans la cellule")
    m: Optional[int] = Field(None, ge=1, description="Nombre de produits réduit")
    n: Optional[int] = Field(None, ge=1, description="Nombre de classes réduit")
    capacities: Optional[list[float]] = Field(None, description="Capacités de remplacement")


class GenerateResponse(BaseModel):
    """Schéma de réponse : document d'instance et ses coordonnées."""

    instance_id: str
    family: str
    v0: float
    alpha: float
    k: int
    instance: dict[str, Any]
