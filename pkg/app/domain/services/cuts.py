"""
Coupes d'approximation externe (OA) et sous-modulaires (SC1, SC2) pour Φ_i.

Toutes les coupes sont des enregistrements de coefficients purs, indépendants
du solveur : target ≥ aᵀx + b.
"""

from typing import Iterable, Optional, Sequence

import numpy as np

from app.core.exceptions import InstanceError
from app.domain.entities.instance import Instance
from app.domain.services.choice_model import as_binary, phi_vector
from app.domain.value_objects.cut import Cut, CutKind, CutTarget, SegmentPartition


def linearize(inst: Instance, x_bar: Sequence[int] | np.ndarray, kind: CutKind) -> tuple[np.ndarray, np.ndarray]:
    """
    Coefficients (A, B) des coupes de toutes les classes au point x̄.

    Returns:
        A de forme (n, m) et B de forme (n,), tels que Φ_i(x) ≥ A[i]·x + B[i]
    """
    x = as_binary(inst, x_bar).astype(float)
    v = inst.v_matrix
    v0 = inst.v0_array[:, None]
    psi = (inst.v0_array + v @ x)[:, None]
    phi = 1.0 / psi[:, 0]

    if kind is CutKind.OA:
        a = -v / psi**2
        b = phi + (v * x / psi**2).sum(axis=1)
        return a, b

    if kind is CutKind.SC1:
        psi_full = inst.v0_array[:, None] + v.sum(axis=1, keepdims=True)
        # Ajout au point x̄ et retrait depuis l'assortiment complet
        add = v * (x - 1.0) / (psi * (psi + v * (1.0 - x)))
        remove = v * x / (psi_full * (psi_full - v))
        return add - remove, phi + remove.sum(axis=1)

    if kind is CutKind.SC2:
        # Ajout depuis l'assortiment vide et retrait au point x̄
        add = v * (x - 1.0) / (v0 * (v0 + v))
        remove = v * x / (psi * (psi - v * x))
        return add - remove, phi + remove.sum(axis=1)

    raise InstanceError(f"Type de coupe inconnu: {kind}")


def _origin(inst: Instance, x_bar: Sequence[int] | np.ndarray) -> tuple[int, ...]:
    return tuple(int(value) for value in as_binary(inst, x_bar))


def _class_cut(inst: Instance, i: int, x_bar: Sequence[int] | np.ndarray, kind: CutKind) -> Cut:
    if not 0 <= i < inst.n:
        raise InstanceError(f"Classe hors bornes: {i}", {"n": inst.n})
    a, b = linearize(inst, x_bar, kind)
    return Cut(
        target=CutTarget.y(i),
        a=tuple(float(c) for c in a[i]),
        b=float(b[i]),
        kind=kind,
        origin=_origin(inst, x_bar),
    )


def oa_cut(inst: Instance, i: int, x_bar: Sequence[int] | np.ndarray) -> Cut:
    """Coupe OA : tangente de Φ_i au point x̄, exacte en x̄."""
    return _class_cut(inst, i, x_bar, CutKind.OA)


def sc_cut_a(inst: Instance, i: int, x_bar: Sequence[int] | np.ndarray) -> Cut:
    """Première coupe sous-modulaire (ajouts évalués en x̄, retraits depuis l'assortiment complet)."""
    return _class_cut(inst, i, x_bar, CutKind.SC1)


def sc_cut_b(inst: Instance, i: int, x_bar: Sequence[int] | np.ndarray) -> Cut:
    """Seconde coupe sous-modulaire (ajouts depuis l'assortiment vide, retraits évalués en x̄)."""
    return _class_cut(inst, i, x_bar, CutKind.SC2)


def class_cuts(
    inst: Instance,
    x_bar: Sequence[int] | np.ndarray,
    kinds: Iterable[CutKind],
    classes: Optional[Iterable[int]] = None,
) -> list[Cut]:
    """Coupes par classe (cibles y_i) pour les classes demandées (toutes par défaut)."""
    origin = _origin(inst, x_bar)
    selected = range(inst.n) if classes is None else classes
    cuts: list[Cut] = []
    for kind in kinds:
        a, b = linearize(inst, origin, kind)
        for i in selected:
            cuts.append(
                Cut(
                    target=CutTarget.y(i),
                    a=tuple(float(c) for c in a[i]),
                    b=float(b[i]),
                    kind=kind,
                    origin=origin,
                )
            )
    return cuts


def segment_weights(inst: Instance, part: SegmentPartition) -> tuple[np.ndarray, np.ndarray]:
    """
    Poids d'agrégation des groupes.

    Returns:
        t_weights (L, n) : rho_i r_i v_i0 pour i ∈ G_l, 0 ailleurs
        z_weights (L, n, m) : rho_i r'_ij v_ij pour i ∈ G_l, 0 ailleurs
    """

    def compute() -> tuple[np.ndarray, np.ndarray]:
        if part.n != inst.n:
            raise InstanceError("La partition ne couvre pas les classes de l'instance")
        membership = np.zeros((part.L, inst.n))
        membership[np.asarray(part.assignment), np.arange(inst.n)] = 1.0
        class_t = inst.rho_array * inst.r_max_class * inst.v0_array
        class_z = inst.rho_array[:, None] * inst.r_shift * inst.v_matrix
        return membership * class_t, membership[:, :, None] * class_z

    return inst.memo(f"segment_weights:{part.assignment}", compute)


def segment_cuts(
    inst: Instance,
    part: SegmentPartition,
    x_bar: Sequence[int] | np.ndarray,
    kinds: Iterable[CutKind],
    targets: Optional[set[CutTarget]] = None,
) -> list[Cut]:
    """
    Coupes agrégées par groupe pour t_l et z_l^j.

    Chaque coupe est la somme pondérée des linéarisations par classe de Φ_i en x̄.
    Les cibles z_l^j de poids total nul sont ignorées. Si targets est fourni,
    seules ces cibles reçoivent des coupes.
    """
    origin = _origin(inst, x_bar)
    t_weights, z_weights = segment_weights(inst, part)
    cuts: list[Cut] = []
    for kind in kinds:
        a, b = linearize(inst, origin, kind)
        for group in range(part.L):
            t_target = CutTarget.t(group)
            if targets is None or t_target in targets:
                weights = t_weights[group]
                cuts.append(
                    Cut(
                        target=t_target,
                        a=tuple(float(c) for c in weights @ a),
                        b=float(weights @ b),
                        kind=kind,
                        origin=origin,
                    )
                )
            for j in range(inst.m):
                weights = z_weights[group, :, j]
                z_target = CutTarget.z(group, j)
                if not weights.any() or (targets is not None and z_target not in targets):
                    continue
                cuts.append(
                    Cut(
                        target=z_target,
                        a=tuple(float(c) for c in weights @ a),
                        b=float(weights @ b),
                        kind=kind,
                        origin=origin,
                    )
                )
    return cuts


def target_values(
    inst: Instance, x: Sequence[int] | np.ndarray, part: Optional[SegmentPartition] = None
) -> dict[CutTarget, float]:
    """Vraie valeur de chaque fonction cible en x (y_i, ou t_l et z_l^j de poids non nul)."""
    phi = phi_vector(inst, x)
    if part is None:
        return {CutTarget.y(i): float(phi[i]) for i in range(inst.n)}
    t_weights, z_weights = segment_weights(inst, part)
    values: dict[CutTarget, float] = {}
    for group in range(part.L):
        values[CutTarget.t(group)] = float(t_weights[group] @ phi)
        for j in range(inst.m):
            weights = z_weights[group, :, j]
            if weights.any():
                values[CutTarget.z(group, j)] = float(weights @ phi)
    return values


def violation(cut: Cut, x: Sequence[float] | np.ndarray, value: float) -> float:
    """(aᵀx + b) − valeur de la cible ; > tolérance signifie que la coupe est violée."""
    return cut.rhs(np.asarray(x, dtype=float)) - float(value)
