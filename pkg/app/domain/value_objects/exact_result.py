"""Résultat d'une résolution."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class SolveStatus(str, Enum):
    """Statut final d'une résolution."""

    OPTIMAL = "optimal"
    FEASIBLE_LIMIT = "feasible-limit"
    INFEASIBLE = "infeasible"
    ERROR = "error"
    HEURISTIC = "heuristic"

    def exit_code(self) -> int:
        """Code de sortie de la CLI associé au statut."""
        if self in (SolveStatus.OPTIMAL, SolveStatus.HEURISTIC):
            return 0
        if self is SolveStatus.FEASIBLE_LIMIT:
            return 1
        if self is SolveStatus.INFEASIBLE:
            return 2
        return 3


class ExactResult(BaseModel):
    """
    Résultat d'une méthode de résolution.

    L'objectif est exprimé en revenu F ; g_value est la forme de minimisation G,
    avec F + G = Σ_i rho_i r_i. La borne est une borne supérieure sur F.
    """

    method: str = Field(..., description="Méthode utilisée")
    status: SolveStatus
    x: tuple[int, ...] = Field(default=(), description="Assortiment retenu")
    objective: Optional[float] = Field(None, description="F(x)")
    g_value: Optional[float] = Field(None, description="G(x)")
    bound: Optional[float] = Field(None, description="Borne duale sur F")
    gap: Optional[float] = Field(None, description="Écart relatif")
    iterations: int = Field(default=0)
    nodes: Optional[int] = Field(default=None)
    cuts_added: int = Field(default=0)
    wall_time: float = Field(default=0.0, description="Temps de calcul (s)")
    ratio_bound: Optional[float] = Field(None, description="Garantie du glouton")
    bound_history: list[float] = Field(default_factory=list, description="Bornes du maître par itération")
    message: Optional[str] = None

    def assortment(self) -> list[int]:
        """Indices des produits retenus."""
        return [j for j, value in enumerate(self.x) if value]

    def summary_line(self) -> str:
        """Ligne de résumé imprimée par la CLI."""

        def fmt(value: Optional[float]) -> str:
            return "-" if value is None else f"{value:.6f}"

        return (
            f"status={self.status.value} F={fmt(self.objective)} bound={fmt(self.bound)} "
            f"gap={fmt(self.gap)} time={self.wall_time:.3f}s"
        )
