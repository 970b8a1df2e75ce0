"""Séparation des coupes partagée par le plan coupant et le branch-and-cut."""

import threading
from typing import Iterable, Optional, Sequence

import numpy as np

from app.core.exceptions import ConfigurationError
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.services.cuts import class_cuts, segment_cuts, target_values
from app.domain.value_objects.cut import Cut, CutKind, CutTarget, SegmentPartition
from app.domain.value_objects.solve_config import CutSelection, SolveConfig
from app.infrastructure.masters.master_model import MasterModel, x_name
from app.infrastructure.solvers.base import LinearRow

logger = get_logger(__name__)


def partition_for(inst: Instance, cfg: SolveConfig) -> Optional[SegmentPartition]:
    """
    Partition contiguë en cfg.segments groupes, ou None en mode par classe.

    Raises:
        ConfigurationError: Si L > n
    """
    if not cfg.uses_segments():
        return None
    if cfg.segments > inst.n:
        raise ConfigurationError(
            f"Le nombre de segments ({cfg.segments}) dépasse le nombre de classes ({inst.n})",
            {"segments": cfg.segments, "n": inst.n},
        )
    return SegmentPartition.contiguous(inst.n, cfg.segments)


def generate_cuts(
    inst: Instance,
    x_bar: Sequence[int] | np.ndarray,
    kinds: Iterable[CutKind],
    part: Optional[SegmentPartition],
    targets: Optional[set[CutTarget]] = None,
) -> list[Cut]:
    """Coupes des cibles demandées (toutes par défaut) au point x̄."""
    kinds = tuple(kinds)
    if part is None:
        classes = None if targets is None else sorted(t.index for t in targets)
        return class_cuts(inst, x_bar, kinds, classes)
    return segment_cuts(inst, part, x_bar, kinds, targets)


def initial_cuts(
    inst: Instance,
    points: Iterable[Sequence[int]],
    kinds: Iterable[CutKind],
    part: Optional[SegmentPartition],
) -> list[Cut]:
    """Coupes initiales aux points donnés (solution gloutonne et vecteur nul)."""
    kinds = tuple(kinds)
    cuts: list[Cut] = []
    for point in points:
        cuts.extend(generate_cuts(inst, point, kinds, part))
    return cuts


def violated_targets(
    inst: Instance,
    x_bar: Sequence[int] | np.ndarray,
    aux: dict[str, float],
    part: Optional[SegmentPartition],
    tolerance: float,
) -> dict[CutTarget, float]:
    """Cibles dont la vraie valeur dépasse la valeur du maître de plus de tolerance."""
    violated: dict[CutTarget, float] = {}
    for target, value in target_values(inst, x_bar, part).items():
        gap = value - aux.get(target.label(), 0.0)
        if gap > tolerance:
            violated[target] = gap
    return violated


def separate(
    inst: Instance,
    x_bar: Sequence[int] | np.ndarray,
    aux: dict[str, float],
    kinds: Iterable[CutKind],
    part: Optional[SegmentPartition],
    tolerance: float,
    selection: CutSelection = CutSelection.VIOLATED,
) -> list[Cut]:
    """
    Coupes à ajouter pour le candidat (x̄, aux).

    Aucune coupe si le candidat est accepté ; sinon les coupes des cibles violées
    (violated) ou de toutes les cibles (all).
    """
    violated = violated_targets(inst, x_bar, aux, part, tolerance)
    if not violated:
        return []
    targets = None if selection is CutSelection.ALL else set(violated)
    return generate_cuts(inst, x_bar, kinds, part, targets)


class LazySeparator:
    """
    Séparateur de contraintes paresseuses pour le branch-and-cut.

    Appelé depuis les threads du backend : ne lit que l'instance immuable et
    renvoie des lignes ; les compteurs sont protégés par un verrou.
    """

    def __init__(
        self,
        inst: Instance,
        master: MasterModel,
        kinds: Iterable[CutKind],
        part: Optional[SegmentPartition],
        tolerance: float,
    ) -> None:
        """Initialiser le séparateur."""
        self.inst = inst
        self.master = master
        self.kinds = tuple(kinds)
        self.part = part
        self.tolerance = tolerance
        self.calls = 0
        self.rejected = 0
        self.cuts: list[Cut] = []
        self._lock = threading.Lock()

    def __call__(self, values: dict[str, float]) -> list[LinearRow]:
        x_bar = np.array([int(values.get(x_name(j), 0.0) > 0.5) for j in range(self.inst.m)], dtype=int)
        aux = {name: values.get(name, 0.0) for name in self.master.target_names}
        cuts = separate(self.inst, x_bar, aux, self.kinds, self.part, self.tolerance)
        with self._lock:
            self.calls += 1
            if cuts:
                self.rejected += 1
                self.cuts.extend(cuts)
        logger.debug("Candidat entier examiné", call=self.calls, cuts=len(cuts))
        return [self.master.cut_row(cut) for cut in cuts]

    @property
    def cuts_emitted(self) -> int:
        with self._lock:
            return len(self.cuts)
