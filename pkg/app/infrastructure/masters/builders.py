"""Constructeurs des problèmes maîtres (Li, Bi, variantes par segments) et du MILP de référence."""

from typing import Optional

import numpy as np

from app.core.exceptions import BilinearUnsupportedError, UnsupportedCapabilityError
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.services.bounds import can_include
from app.domain.services.cuts import segment_weights
from app.domain.value_objects.bound_table import BoundTable
from app.domain.value_objects.cut import CutTarget, SegmentPartition
from app.domain.value_objects.solve_config import Linearization
from app.infrastructure.masters.master_model import MasterModel, x_name
from app.infrastructure.solvers.base import BackendModel, LinearRow, Sense, SolverBackend

logger = get_logger(__name__)


def theta_name(i: int, j: int) -> str:
    return f"theta_{i}_{j}"


def eta_name(group: int, j: int) -> str:
    return f"eta_{group}_{j}"


def _session(backend: SolverBackend, name: str, bilinear: bool = False) -> BackendModel:
    if not backend.capabilities.milp:
        raise UnsupportedCapabilityError(f"Le backend {backend.name} ne résout pas de MILP")
    if bilinear and not backend.capabilities.bilinear_objective:
        raise BilinearUnsupportedError(
            f"Le backend {backend.name} ne gère pas les objectifs bilinéaires",
            {"backend": backend.name},
        )
    return backend.create_model(name)


def _add_assortment(master: MasterModel, fixed_zero: tuple[int, ...] = ()) -> None:
    """Variables x binaires et contraintes de X."""
    inst = master.inst
    for j in range(inst.m):
        master.backend_model.add_variable(x_name(j), 0.0, 0.0 if j in fixed_zero else 1.0, binary=True)
    for k, constraint in enumerate(inst.constraints):
        terms = {x_name(j): beta for j, beta in enumerate(constraint.beta) if beta != 0.0}
        if terms:
            master.add_structural_row(
                LinearRow(terms=terms, sense=Sense.LE, rhs=constraint.alpha, name=f"cap_{k}")
            )


def _fixed_zero(inst: Instance) -> tuple[int, ...]:
    return tuple(j for j in range(inst.m) if not can_include(inst, j))


def _add_class_targets(master: MasterModel) -> None:
    inst = master.inst
    for i in range(inst.n):
        master.backend_model.add_variable(CutTarget.y(i).label(), 0.0, 1.0 / inst.v0_array[i])


def _mccormick(
    master: MasterModel,
    product: str,
    aux: str,
    xj: str,
    upper_if_in: float,
    lower_if_in: float,
    lower_if_out: float,
    upper_any: float,
    tag: str,
) -> None:
    """
    Quatre lignes d'enveloppe pour product = x_j · aux.

    aux ∈ [lower_if_in, upper_if_in] si x_j = 1, aux ≥ lower_if_out si x_j = 0,
    aux ≤ upper_any toujours.
    """
    rows = (
        LinearRow(terms={product: 1.0, xj: -upper_if_in}, sense=Sense.LE, rhs=0.0, name=f"mc1_{tag}"),
        LinearRow(terms={product: 1.0, xj: -lower_if_in}, sense=Sense.GE, rhs=0.0, name=f"mc2_{tag}"),
        LinearRow(
            terms={product: 1.0, aux: -1.0, xj: -lower_if_out},
            sense=Sense.LE,
            rhs=-lower_if_out,
            name=f"mc3_{tag}",
        ),
        LinearRow(
            terms={product: 1.0, aux: -1.0, xj: -upper_any},
            sense=Sense.GE,
            rhs=-upper_any,
            name=f"mc4_{tag}",
        ),
    )
    for row in rows:
        master.add_structural_row(row)


def _class_objective(inst: Instance) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients rho_i r'_ij v_ij et rho_i r_i v_i0 de l'objectif G."""
    pair = inst.rho_array[:, None] * inst.r_shift * inst.v_matrix
    single = inst.rho_array * inst.r_max_class * inst.v0_array
    return pair, single


def build_li_master(
    inst: Instance,
    bounds: BoundTable,
    backend: SolverBackend,
    dump_dir: Optional[str] = None,
) -> MasterModel:
    """
    Construire le maître linéarisé par classe.

    Variables x, y et θ_ij = x_j y_i ; les quatre familles McCormick utilisent
    les bornes conditionnelles φ_ij(0) et φ_ij(1). Aucune coupe n'est ajoutée.
    """
    session = _session(backend, "li_master")
    targets = [CutTarget.y(i) for i in range(inst.n)]
    master = MasterModel("li", inst, session, targets, dump_dir=dump_dir)
    _add_assortment(master, bounds.fixed_zero)
    _add_class_targets(master)

    phi1, phi0 = bounds.phi1_matrix(), bounds.phi0_matrix()
    pair, single = _class_objective(inst)
    objective: dict[str, float] = {}
    for i in range(inst.n):
        y = CutTarget.y(i).label()
        objective[y] = float(single[i])
        for j in range(inst.m):
            theta = theta_name(i, j)
            session.add_variable(theta, 0.0)
            objective[theta] = float(pair[i, j])
            _mccormick(
                master,
                theta,
                y,
                x_name(j),
                upper_if_in=1.0 / (inst.v0_array[i] + inst.v_matrix[i, j]),
                lower_if_in=float(phi1[i, j]),
                lower_if_out=float(phi0[i, j]),
                upper_any=1.0 / inst.v0_array[i],
                tag=f"{i}_{j}",
            )
    session.set_objective(objective)
    logger.debug("Maître Li construit", n=inst.n, m=inst.m, rows=master.structural_rows)
    return master


def build_bi_master(
    inst: Instance,
    backend: SolverBackend,
    dump_dir: Optional[str] = None,
) -> MasterModel:
    """
    Construire le maître bilinéaire par classe (objectif avec termes x_j y_i).

    Raises:
        BilinearUnsupportedError: Si le backend ne gère pas les objectifs bilinéaires
    """
    session = _session(backend, "bi_master", bilinear=True)
    targets = [CutTarget.y(i) for i in range(inst.n)]
    master = MasterModel("bi", inst, session, targets, dump_dir=dump_dir)
    _add_assortment(master, _fixed_zero(inst))
    _add_class_targets(master)

    pair, single = _class_objective(inst)
    linear = {CutTarget.y(i).label(): float(single[i]) for i in range(inst.n)}
    products = [
        (x_name(j), CutTarget.y(i).label(), float(pair[i, j]))
        for i in range(inst.n)
        for j in range(inst.m)
        if pair[i, j] != 0.0
    ]
    session.set_objective(linear, products)
    return master


def _add_segment_targets(master: MasterModel, z_upper: np.ndarray, t_upper: np.ndarray) -> None:
    session = master.backend_model
    for target in master.targets:
        if target.family == "t":
            session.add_variable(target.label(), 0.0, float(t_upper[target.index]))
        else:
            session.add_variable(target.label(), 0.0, float(z_upper[target.index, target.product]))


def _segment_targets(inst: Instance, part: SegmentPartition) -> list[CutTarget]:
    _, z_weights = segment_weights(inst, part)
    targets = [CutTarget.t(group) for group in range(part.L)]
    for group in range(part.L):
        for j in range(inst.m):
            if z_weights[group, :, j].any():
                targets.append(CutTarget.z(group, j))
    return targets


def _segment_upper(inst: Instance, part: SegmentPartition) -> tuple[np.ndarray, np.ndarray]:
    """Bornes supérieures de z_l^j et t_l (Φ_i ≤ 1/v_i0)."""
    t_weights, z_weights = segment_weights(inst, part)
    inverse = 1.0 / inst.v0_array
    return np.einsum("lij,i->lj", z_weights, inverse), t_weights @ inverse


def build_li_master_sb(
    inst: Instance,
    part: SegmentPartition,
    bounds: BoundTable,
    backend: SolverBackend,
    dump_dir: Optional[str] = None,
) -> MasterModel:
    """
    Construire le maître linéarisé par segments.

    Variables x, z_l^j, t_l et η_lj = x_j z_l^j, avec enveloppes McCormick
    agrégées sur chaque groupe. Objectif Σ η + Σ t.
    """
    session = _session(backend, "li_master_sb")
    targets = _segment_targets(inst, part)
    master = MasterModel("li-sb", inst, session, targets, partition=part, dump_dir=dump_dir)
    _add_assortment(master, bounds.fixed_zero)
    z_upper, t_upper = _segment_upper(inst, part)
    _add_segment_targets(master, z_upper, t_upper)

    _, z_weights = segment_weights(inst, part)
    phi1, phi0 = bounds.phi1_matrix(), bounds.phi0_matrix()
    in_upper = 1.0 / (inst.v0_array[:, None] + inst.v_matrix)
    objective = {CutTarget.t(group).label(): 1.0 for group in range(part.L)}
    for target in targets:
        if target.family != "z":
            continue
        group, j = target.index, target.product
        weights = z_weights[group, :, j]
        eta = eta_name(group, j)
        session.add_variable(eta, 0.0)
        objective[eta] = 1.0
        _mccormick(
            master,
            eta,
            target.label(),
            x_name(j),
            upper_if_in=float(weights @ in_upper[:, j]),
            lower_if_in=float(weights @ phi1[:, j]),
            lower_if_out=float(weights @ phi0[:, j]),
            upper_any=float(z_upper[group, j]),
            tag=f"{group}_{j}",
        )
    session.set_objective(objective)
    logger.debug("Maître Li-SB construit", L=part.L, m=inst.m, rows=master.structural_rows)
    return master


def build_bi_master_sb(
    inst: Instance,
    part: SegmentPartition,
    backend: SolverBackend,
    dump_dir: Optional[str] = None,
) -> MasterModel:
    """Construire le maître bilinéaire par segments : objectif Σ x_j z_l^j + Σ t_l."""
    session = _session(backend, "bi_master_sb", bilinear=True)
    targets = _segment_targets(inst, part)
    master = MasterModel("bi-sb", inst, session, targets, partition=part, dump_dir=dump_dir)
    _add_assortment(master, _fixed_zero(inst))
    z_upper, t_upper = _segment_upper(inst, part)
    _add_segment_targets(master, z_upper, t_upper)

    linear = {CutTarget.t(group).label(): 1.0 for group in range(part.L)}
    products = [(x_name(t.product), t.label(), 1.0) for t in targets if t.family == "z"]
    session.set_objective(linear, products)
    return master


def add_relation_rows(master: MasterModel) -> int:
    """
    Ajouter les lignes de renforcement v_i0 y_i + Σ_j v_ij x_j y_i ≥ 1.

    Forme θ pour les maîtres linéarisés, forme bilinéaire pour le maître Bi.
    Les maîtres par segments n'ont pas de variable par classe : aucune ligne.

    Returns:
        Nombre de lignes ajoutées
    """
    inst = master.inst
    if master.kind in ("li", "milp"):
        for i in range(inst.n):
            terms = {CutTarget.y(i).label(): float(inst.v0_array[i])}
            terms.update({theta_name(i, j): float(inst.v_matrix[i, j]) for j in range(inst.m)})
            master.add_structural_row(LinearRow(terms=terms, sense=Sense.GE, rhs=1.0, name=f"define_y_{i}"))
        return inst.n
    if master.kind == "bi":
        for i in range(inst.n):
            y = CutTarget.y(i).label()
            products = [(x_name(j), y, float(inst.v_matrix[i, j])) for j in range(inst.m) if inst.v_matrix[i, j]]
            master.backend_model.add_bilinear_row(
                {y: float(inst.v0_array[i])}, products, Sense.GE, 1.0, name=f"define_y_{i}"
            )
            master.structural_rows += 1
        return inst.n
    logger.info("Pas de renforcement pour un maître par segments", kind=master.kind)
    return 0


def build_milp_baseline(
    inst: Instance,
    bounds: BoundTable,
    backend: SolverBackend,
    linearization: Linearization | str = Linearization.MCCORMICK,
    dump_dir: Optional[str] = None,
) -> MasterModel:
    """
    Construire la formulation MILP complète (résolue sans boucle de coupes).

    Args:
        linearization: mccormick (enveloppes φ_ij) ou bigM (constantes 1/v_i0)
    """
    linearization = Linearization(linearization)
    session = _session(backend, f"milp_{linearization.value}")
    targets = [CutTarget.y(i) for i in range(inst.n)]
    master = MasterModel("milp", inst, session, targets, dump_dir=dump_dir)
    _add_assortment(master, bounds.fixed_zero)
    _add_class_targets(master)

    phi1, phi0 = bounds.phi1_matrix(), bounds.phi0_matrix()
    pair, single = _class_objective(inst)
    objective: dict[str, float] = {}
    for i in range(inst.n):
        y = CutTarget.y(i).label()
        v0 = float(inst.v0_array[i])
        objective[y] = float(single[i])
        for j in range(inst.m):
            theta, xj = theta_name(i, j), x_name(j)
            session.add_variable(theta, 0.0)
            objective[theta] = float(pair[i, j])
            if linearization is Linearization.MCCORMICK:
                _mccormick(
                    master,
                    theta,
                    y,
                    xj,
                    upper_if_in=1.0 / (v0 + inst.v_matrix[i, j]),
                    lower_if_in=float(phi1[i, j]),
                    lower_if_out=float(phi0[i, j]),
                    upper_any=1.0 / v0,
                    tag=f"{i}_{j}",
                )
            else:
                tag = f"{i}_{j}"
                master.add_structural_row(
                    LinearRow(terms={theta: v0, xj: -1.0}, sense=Sense.LE, rhs=0.0, name=f"bigm1_{tag}")
                )
                master.add_structural_row(
                    LinearRow(terms={theta: 1.0, y: -1.0}, sense=Sense.LE, rhs=0.0, name=f"bigm2_{tag}")
                )
                master.add_structural_row(
                    LinearRow(
                        terms={y: v0, theta: -v0, xj: 1.0}, sense=Sense.LE, rhs=1.0, name=f"bigm3_{tag}"
                    )
                )
    session.set_objective(objective)
    add_relation_rows(master)
    return master
