"""Value objects pour les coupes et la partition des classes en segments."""

from enum import Enum
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class CutKind(str, Enum):
    """Nature d'une coupe."""

    OA = "OA"
    SC1 = "SC1"
    SC2 = "SC2"


class CutSet(str, Enum):
    """Familles de coupes configurables."""

    OA = "oa"
    OA_SC = "oa+sc"

    def kinds(self) -> tuple[CutKind, ...]:
        """Les deux variantes SC accompagnent OA dans la configuration oa+sc."""
        if self is CutSet.OA:
            return (CutKind.OA,)
        return (CutKind.OA, CutKind.SC1, CutKind.SC2)


class CutTarget(BaseModel):
    """Variable auxiliaire minorée par une coupe : y_i, z_l^j ou t_l."""

    model_config = ConfigDict(frozen=True)

    family: Literal["y", "z", "t"]
    index: int = Field(..., ge=0, description="Classe i (y) ou groupe l (z, t)")
    product: Optional[int] = Field(None, ge=0, description="Produit j pour z_l^j")

    @model_validator(mode="after")
    def check_product(self) -> "CutTarget":
        """Seules les cibles z portent un produit."""
        if (self.family == "z") != (self.product is not None):
            raise ValueError("seules les cibles z portent un indice de produit")
        return self

    @classmethod
    def y(cls, i: int) -> "CutTarget":
        return cls(family="y", index=i)

    @classmethod
    def z(cls, group: int, product: int) -> "CutTarget":
        return cls(family="z", index=group, product=product)

    @classmethod
    def t(cls, group: int) -> "CutTarget":
        return cls(family="t", index=group)

    def label(self) -> str:
        """Nom lisible, utilisé pour nommer les lignes du maître."""
        if self.family == "z":
            return f"z_{self.index}_{self.product}"
        return f"{self.family}_{self.index}"


class Cut(BaseModel):
    """
    Inégalité valide target ≥ aᵀx + b, découplée de tout modèle de solveur.

    Pour tout x binaire, la fonction définissant la cible vérifie f(x) ≥ aᵀx + b.
    """

    model_config = ConfigDict(frozen=True)

    target: CutTarget
    a: tuple[float, ...]
    b: float
    kind: CutKind
    origin: tuple[int, ...] = Field(..., description="Point de génération x̄")

    def rhs(self, x: np.ndarray) -> float:
        """Valeur aᵀx + b."""
        return float(np.dot(self.a, x) + self.b)

    def key(self) -> tuple:
        """Identifiant de dédoublonnage dans un maître."""
        return (self.target, self.kind, self.origin)


class SegmentPartition(BaseModel):
    """Partition des n classes en L groupes disjoints couvrant [n]."""

    model_config = ConfigDict(frozen=True)

    L: int = Field(..., ge=1, description="Nombre de groupes")
    assignment: tuple[int, ...] = Field(..., description="Groupe de chaque classe")

    @model_validator(mode="after")
    def check_groups(self) -> "SegmentPartition":
        """Chaque groupe doit être non vide."""
        if any(not 0 <= g < self.L for g in self.assignment):
            raise ValueError("affectation hors de [0, L)")
        if len(set(self.assignment)) != self.L:
            raise ValueError("chaque groupe doit contenir au moins une classe")
        return self

    @classmethod
    def contiguous(cls, n: int, L: int) -> "SegmentPartition":
        """Blocs contigus de tailles quasi égales."""
        if not 1 <= L <= n:
            raise ValueError(f"L doit être dans [1, {n}]")
        assignment = np.empty(n, dtype=int)
        for group, block in enumerate(np.array_split(np.arange(n), L)):
            assignment[block] = group
        return cls(L=L, assignment=tuple(int(g) for g in assignment))

    @classmethod
    def singleton(cls, n: int) -> "SegmentPartition":
        """Une classe par groupe."""
        return cls(L=n, assignment=tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def groups(self) -> list[np.ndarray]:
        """Indices des classes de chaque groupe."""
        labels = np.asarray(self.assignment)
        return [np.flatnonzero(labels == g) for g in range(self.L)]
