"""Value objects des campagnes de benchmark."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

CSV_SCHEMA_VERSION = 1

CSV_COLUMNS = (
    "instance",
    "family",
    "v0",
    "alpha",
    "method",
    "master",
    "cuts",
    "L",
    "status",
    "objective",
    "bound",
    "gap",
    "time_s",
    "iterations",
    "nodes",
    "cuts_added",
)


class ConstraintScheme(str, Enum):
    """Schéma de contraintes d'une famille d'instances."""

    CARDINALITY = "cardinality"
    SUBSETS = "subsets"
    GENERAL = "general"


class UtilityScheme(str, Enum):
    """Loi de génération des préférences v_ij."""

    PRODUCT_U12 = "product-u12"
    GRAPH = "graph"
    UNIFORM_U01 = "uniform-u01"


class FamilySpec(BaseModel):
    """Description d'une famille d'instances."""

    model_config = ConfigDict(frozen=True)

    name: str
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    utility: UtilityScheme
    revenue_low: float = 1.0
    revenue_high: float = 3.0
    revenue_per_product: bool = Field(
        default=False, description="Revenu identique entre classes pour un produit"
    )
    rho_uniform: bool = Field(default=False, description="rho_i = 1/n sinon U[0,1]")
    v0_choices: tuple[float, ...]
    scheme: ConstraintScheme
    capacities: tuple[float, ...] = Field(default=(), description="C ou alpha")
    subset_pairs: tuple[tuple[float, int], ...] = Field(
        default=(), description="Paires (alpha, C_k) pour le schéma à sous-ensembles"
    )
    subsets: int = Field(default=0, ge=0, description="Nombre de sous-ensembles disjoints")
    instances_per_cell: int = Field(default=5, ge=1)
    graph_edge_probability: float = 0.1

    def cells(self) -> list[tuple[float, float, Optional[int]]]:
        """Cellules (v0, alpha, C_k) dans l'ordre de génération."""
        if self.scheme is ConstraintScheme.SUBSETS:
            return [(v0, alpha, ck) for v0 in self.v0_choices for alpha, ck in self.subset_pairs]
        return [(v0, alpha, None) for v0 in self.v0_choices for alpha in self.capacities]


class BenchmarkRecord(BaseModel):
    """Une ligne du CSV de résultats."""

    instance: str
    family: str
    v0: Optional[float] = None
    alpha: Optional[float] = None
    method: str
    master: str = ""
    cuts: str = ""
    L: int = 0
    status: str
    objective: Optional[float] = None
    bound: Optional[float] = None
    gap: Optional[float] = None
    time_s: float = 0.0
    iterations: int = 0
    nodes: Optional[int] = None
    cuts_added: int = 0

    def as_row(self) -> list[str]:
        """Valeurs dans l'ordre des colonnes du CSV."""
        data = self.model_dump()
        return ["" if data[col] is None else str(data[col]) for col in CSV_COLUMNS]
