"""Problème maître : registre des variables, coupes et résolution sur un backend."""

from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.value_objects.cut import Cut, CutTarget, SegmentPartition
from app.infrastructure.solvers.base import (
    BackendModel,
    LinearRow,
    MasterStatus,
    Sense,
    Separator,
    SolveLimits,
)

logger = get_logger(__name__)


def x_name(j: int) -> str:
    return f"x_{j}"


class MasterSolution(BaseModel):
    """Solution d'un maître : x entier, valeurs des cibles, objectif et borne (forme G)."""

    status: MasterStatus
    x: tuple[int, ...] = ()
    aux: dict[str, float] = Field(default_factory=dict, description="Valeur par cible (label)")
    objective: Optional[float] = None
    bound: Optional[float] = None
    nodes: Optional[int] = None

    def has_incumbent(self) -> bool:
        return self.objective is not None

    def aux_value(self, target: CutTarget) -> float:
        return self.aux.get(target.label(), 0.0)


class MasterModel:
    """
    Maître construit sur une session de backend.

    Les cibles (y_i, ou t_l et z_l^j) sont des variables continues nommées par
    CutTarget.label() ; les coupes ajoutées sont dédoublonnées.
    """

    def __init__(
        self,
        kind: str,
        inst: Instance,
        backend_model: BackendModel,
        targets: Sequence[CutTarget],
        partition: Optional[SegmentPartition] = None,
        dump_dir: Optional[str] = None,
    ) -> None:
        """Initialiser le maître (les variables sont créées par les constructeurs)."""
        self.kind = kind
        self.inst = inst
        self.backend_model = backend_model
        self.targets = list(targets)
        self._target_labels = {target.label() for target in self.targets}
        self.partition = partition
        self.dump_dir = dump_dir
        self.structural_rows = 0
        self.cuts_added = 0
        self._cut_keys: set[tuple] = set()
        self._solves = 0

    @property
    def x_names(self) -> list[str]:
        return [x_name(j) for j in range(self.inst.m)]

    @property
    def target_names(self) -> set[str]:
        return self._target_labels

    def add_structural_row(self, row: LinearRow) -> None:
        """Ajouter une ligne de formulation (McCormick, renforcement, contraintes de X)."""
        self.backend_model.add_row(row)
        self.structural_rows += 1

    def cut_row(self, cut: Cut) -> LinearRow:
        """Ligne target − aᵀx ≥ b."""
        terms = {x_name(j): -coef for j, coef in enumerate(cut.a) if coef != 0.0}
        terms[cut.target.label()] = 1.0
        return LinearRow(terms=terms, sense=Sense.GE, rhs=cut.b)

    def add_cut(self, cut: Cut) -> bool:
        """
        Ajouter une coupe au maître.

        Returns:
            False si la coupe était déjà présente (maître inchangé)
        """
        if cut.target.label() not in self.target_names:
            return False
        key = cut.key()
        if key in self._cut_keys:
            return False
        self._cut_keys.add(key)
        self.backend_model.add_row(self.cut_row(cut))
        self.cuts_added += 1
        return True

    def add_cuts(self, cuts: Sequence[Cut]) -> int:
        """Ajouter plusieurs coupes ; renvoie le nombre de nouvelles coupes."""
        return sum(1 for cut in cuts if self.add_cut(cut))

    def set_start(self, x: Sequence[int] | np.ndarray) -> None:
        """Suggérer un assortiment de départ au backend."""
        if self.backend_model.capabilities.warm_start:
            self.backend_model.set_start({x_name(j): float(v) for j, v in enumerate(x)})

    def solve(self, limits: SolveLimits, separator: Optional[Separator] = None) -> MasterSolution:
        """Résoudre le maître et extraire x, les cibles, l'objectif et la borne."""
        self._solves += 1
        if self.dump_dir:
            self.dump(str(Path(self.dump_dir) / f"{self.kind}_{self._solves:04d}.lp"))
        raw = self.backend_model.solve(limits, separator)
        solution = MasterSolution(status=raw.status, objective=raw.objective, bound=raw.bound, nodes=raw.nodes)
        if raw.values:
            solution.x = tuple(int(raw.values.get(name, 0.0) > 0.5) for name in self.x_names)
            solution.aux = {name: raw.values.get(name, 0.0) for name in self.target_names}
        return solution

    def dump(self, path: str) -> None:
        """Écrire le modèle au format LP."""
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        self.backend_model.write(path)
        logger.debug("Modèle exporté", path=path, kind=self.kind)

    def variable_count(self) -> int:
        return len(self.backend_model.variable_names())
