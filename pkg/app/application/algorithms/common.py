"""Choix du maître et mise en forme des résultats, communs au plan coupant et au branch-and-cut."""

from typing import Optional

import numpy as np

from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.services.bounds import build_bound_table
from app.domain.services.choice_model import eval_min_objective
from app.domain.value_objects.cut import SegmentPartition
from app.domain.value_objects.exact_result import ExactResult, SolveStatus
from app.domain.value_objects.solve_config import MasterKind, SolveConfig
from app.infrastructure.masters.builders import (
    build_bi_master,
    build_bi_master_sb,
    build_li_master,
    build_li_master_sb,
)
from app.infrastructure.masters.master_model import MasterModel
from app.infrastructure.solvers.base import MasterStatus, SolverBackend

logger = get_logger(__name__)


def build_master(
    inst: Instance,
    cfg: SolveConfig,
    backend: SolverBackend,
    part: Optional[SegmentPartition],
) -> tuple[MasterModel, MasterKind]:
    """
    Construire le maître demandé.

    Le maître Bi se replie sur le maître Li quand le backend ne gère pas les
    objectifs bilinéaires.
    """
    kind = cfg.master
    if kind is MasterKind.BI and not backend.capabilities.bilinear_objective:
        logger.warning(
            "Objectif bilinéaire non supporté, repli sur le maître linéarisé",
            backend=backend.name,
        )
        kind = MasterKind.LI

    if kind is MasterKind.BI:
        if part is None:
            return build_bi_master(inst, backend, cfg.dump_model), kind
        return build_bi_master_sb(inst, part, backend, cfg.dump_model), kind

    bounds = build_bound_table(inst, cfg.bound_mode)
    if part is None:
        return build_li_master(inst, bounds, backend, cfg.dump_model), kind
    return build_li_master_sb(inst, part, bounds, backend, cfg.dump_model), kind


def relative_gap(g_incumbent: float, g_bound: Optional[float]) -> Optional[float]:
    """(G_incumbent − G_bound) / max(1, |G_incumbent|), tronqué à 0."""
    if g_bound is None:
        return None
    return max(0.0, (g_incumbent - g_bound) / max(1.0, abs(g_incumbent)))


def to_status(master_status: MasterStatus) -> SolveStatus:
    return SolveStatus(master_status.value)


def finalize(
    inst: Instance,
    method: str,
    status: SolveStatus,
    x: np.ndarray | tuple[int, ...],
    g_bound: Optional[float],
    start: float,
    end: float,
    **extra: object,
) -> ExactResult:
    """
    Construire l'ExactResult d'une méthode exacte à partir de la forme G.

    La borne duale sur F vaut Σ_i rho_i r_i − G_bound.
    """
    x_tuple = tuple(int(v) for v in x)
    g_value = eval_min_objective(inst, x_tuple)
    if g_bound is not None:
        g_bound = min(g_bound, g_value)
    return ExactResult(
        method=method,
        status=status,
        x=x_tuple,
        objective=inst.constant_revenue - g_value,
        g_value=g_value,
        bound=None if g_bound is None else inst.constant_revenue - g_bound,
        gap=relative_gap(g_value, g_bound),
        wall_time=end - start,
        **extra,
    )
