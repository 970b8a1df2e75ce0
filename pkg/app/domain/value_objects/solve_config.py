"""Configuration d'une résolution."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.domain.value_objects.bound_table import BoundMode
from app.domain.value_objects.cut import CutSet


class Method(str, Enum):
    """Méthodes de résolution disponibles."""

    CP = "cp"
    BC = "bc"
    MILP = "milp"
    GREEDY = "greedy"
    BRUTE = "brute"


class MasterKind(str, Enum):
    """Forme du problème maître : bilinéaire ou linéarisé (McCormick)."""

    BI = "bi"
    LI = "li"


class Linearization(str, Enum):
    """Linéarisation des produits x_j y_i dans la formulation MILP."""

    MCCORMICK = "mccormick"
    BIGM = "bigM"


class CutSelection(str, Enum):
    """Politique d'ajout des coupes à chaque itération du plan coupant."""

    VIOLATED = "violated"
    ALL = "all"


class SolveConfig(BaseModel):
    """Paramètres d'une résolution exacte ou heuristique."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    method: Method = Field(default=Method.CP)
    master: MasterKind = Field(default=MasterKind.LI)
    cuts: CutSet = Field(default=CutSet.OA)
    segments: int = Field(default=0, ge=0, description="Nombre de groupes L (0 = par classe)")
    epsilon: float = Field(default=1e-6, gt=0, description="Écart d'optimalité relatif")
    time_limit: float = Field(default=3600.0, gt=0, description="Limite de temps (s)")
    seed: int = Field(default=0, ge=0)
    threads: int = Field(default=1, ge=0)
    cut_selection: CutSelection = Field(default=CutSelection.VIOLATED)
    cut_tolerance: float = Field(default=1e-6, gt=0, description="Seuil de violation absolu")
    strengthen: bool = Field(default=True, description="Lignes de renforcement en B&C")
    linearization: Linearization = Field(default=Linearization.MCCORMICK)
    bound_mode: BoundMode = Field(default=BoundMode.AUTO)
    warm_start: bool = Field(default=True)
    max_iterations: int = Field(default=10_000, ge=1)
    dump_model: Optional[str] = Field(default=None, description="Répertoire de dump LP")

    def uses_segments(self) -> bool:
        return self.segments > 0
