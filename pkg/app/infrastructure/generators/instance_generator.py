"""
Génération déterministe des instances d'une famille.

Chaque instance utilise son propre générateur numpy, dérivé de
SeedSequence([seed, cellule, k]). Ordre des tirages : rho, graine du graphe
(famille à graphe), v (ligne par ligne : i puis j), r, beta.
"""

from typing import Optional

import networkx as nx
import numpy as np
from pydantic import BaseModel

from app.core.exceptions import InstanceError
from app.core.logging import get_logger
from app.domain.entities.instance import Instance, LinearConstraint
from app.domain.value_objects.benchmark import ConstraintScheme, FamilySpec, UtilityScheme
from app.infrastructure.generators.families import get_family

logger = get_logger(__name__)


class GeneratedInstance(BaseModel):
    """Instance générée et ses coordonnées dans la famille."""

    instance_id: str
    family: str
    v0: float
    alpha: float
    k: int
    instance: Instance


def instance_id(family: str, v0: float, alpha: float, k: int) -> str:
    """Identifiant stable : famille, v0, capacité et rang dans la cellule."""
    return f"{family}_v0-{v0:g}_a-{alpha:g}_{k:02d}"


def rng_for(seed: int, cell: int, k: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, cell, k]))


def with_size(
    spec: FamilySpec,
    m: Optional[int] = None,
    n: Optional[int] = None,
    capacities: Optional[tuple[float, ...]] = None,
    subset_pairs: Optional[tuple[tuple[float, int], ...]] = None,
) -> FamilySpec:
    """Copie de la famille avec tailles ou capacités réduites (échelle bureau)."""
    update: dict[str, object] = {}
    if m is not None:
        update["m"] = m
    if n is not None:
        update["n"] = n
    if capacities is not None:
        update["capacities"] = tuple(capacities)
    if subset_pairs is not None:
        update["subset_pairs"] = tuple(subset_pairs)
    if spec.subsets and m is not None and spec.subsets > m:
        update["subsets"] = m
    return FamilySpec.model_validate({**spec.model_dump(), **update})


def _utilities(spec: FamilySpec, rng: np.random.Generator) -> np.ndarray:
    shape = (spec.n, spec.m)
    if spec.utility is UtilityScheme.PRODUCT_U12:
        return rng.uniform(1.0, 2.0, size=shape)
    if spec.utility is UtilityScheme.UNIFORM_U01:
        return rng.uniform(0.0, 1.0, size=shape)
    # Graphe biparti aléatoire classes × produits : v_ij > 0 seulement sur les arêtes
    graph_seed = int(rng.integers(0, 2**31 - 1))
    graph = nx.bipartite.random_graph(spec.n, spec.m, spec.graph_edge_probability, seed=graph_seed)
    mask = np.zeros(shape)
    for u, w in graph.edges():
        i, j = (u, w - spec.n) if u < spec.n else (w, u - spec.n)
        mask[i, j] = 1.0
    return rng.uniform(1.0, 2.0, size=shape) * mask


def _constraints(
    spec: FamilySpec, alpha: float, ck: Optional[int], rng: np.random.Generator
) -> list[LinearConstraint]:
    if spec.scheme is ConstraintScheme.CARDINALITY:
        return [LinearConstraint.cardinality(spec.m, alpha)]
    beta = rng.uniform(0.0, 1.0, size=spec.m)
    rows = [LinearConstraint(beta=tuple(float(b) for b in beta), alpha=alpha)]
    if spec.scheme is ConstraintScheme.SUBSETS:
        for block in np.array_split(np.arange(spec.m), spec.subsets):
            ones = np.zeros(spec.m)
            ones[block] = 1.0
            rows.append(LinearConstraint(beta=tuple(float(b) for b in ones), alpha=float(ck)))
    return rows


def generate_instance(
    spec: FamilySpec, v0: float, alpha: float, ck: Optional[int], rng: np.random.Generator
) -> Instance:
    """Tirer une instance d'une cellule (v0, alpha, C_k) de la famille."""
    rho = np.full(spec.n, 1.0 / spec.n) if spec.rho_uniform else rng.uniform(0.0, 1.0, size=spec.n)
    v = _utilities(spec, rng)
    if spec.revenue_per_product:
        r = np.broadcast_to(rng.uniform(spec.revenue_low, spec.revenue_high, size=spec.m), (spec.n, spec.m))
    else:
        r = rng.uniform(spec.revenue_low, spec.revenue_high, size=(spec.n, spec.m))
    constraints = _constraints(spec, alpha, ck, rng)
    return Instance.from_arrays(rho, np.full(spec.n, v0), v, r, constraints)


def generate_family(
    spec: FamilySpec, seed: int, instances_per_cell: Optional[int] = None
) -> list[GeneratedInstance]:
    """Toutes les instances de la famille, cellule par cellule (ordre ligne)."""
    per_cell = instances_per_cell or spec.instances_per_cell
    generated: list[GeneratedInstance] = []
    for cell, (v0, alpha, ck) in enumerate(spec.cells()):
        for k in range(per_cell):
            inst = generate_instance(spec, v0, alpha, ck, rng_for(seed, cell, k))
            generated.append(
                GeneratedInstance(
                    instance_id=instance_id(spec.name, v0, alpha, k),
                    family=spec.name,
                    v0=v0,
                    alpha=alpha,
                    k=k,
                    instance=inst,
                )
            )
    logger.info("Famille générée", family=spec.name, instances=len(generated), seed=seed)
    return generated


def generate(
    family: FamilySpec | str,
    seed: int,
    v0: Optional[float] = None,
    alpha: Optional[float] = None,
    k: int = 0,
) -> GeneratedInstance:
    """
    Générer une instance d'une famille.

    Args:
        family: Famille ou nom de famille
        seed: Graine
        v0: Préférence de non-achat (première valeur de la famille par défaut)
        alpha: Capacité (première valeur de la famille par défaut)
        k: Rang de l'instance dans la cellule

    Raises:
        InstanceError: Si la famille est inconnue ou la cellule absente
    """
    spec = get_family(family) if isinstance(family, str) else family
    for cell, (cell_v0, cell_alpha, ck) in enumerate(spec.cells()):
        if (v0 is None or cell_v0 == v0) and (alpha is None or cell_alpha == alpha):
            inst = generate_instance(spec, cell_v0, cell_alpha, ck, rng_for(seed, cell, k))
            return GeneratedInstance(
                instance_id=instance_id(spec.name, cell_v0, cell_alpha, k),
                family=spec.name,
                v0=cell_v0,
                alpha=cell_alpha,
                k=k,
                instance=inst,
            )
    raise InstanceError(
        f"Cellule absente de la famille {spec.name}", {"v0": v0, "alpha": alpha}
    )


def generate_ratio_instance(
    n: int, m: int, ratio: float, capacity: int, rng: np.random.Generator, r_max: float = 3.0
) -> Instance:
    """
    Instance à rapport r_min/r_max imposé.

    Les revenus suivent U[ratio·r_max, r_max] avec une paire à chaque extrémité,
    de sorte que le rapport vaut exactement ratio.
    """
    if not 0 < ratio <= 1:
        raise InstanceError(f"Rapport hors de ]0, 1]: {ratio}")
    rho = np.full(n, 1.0 / n)
    v0 = rng.uniform(1.0, 3.0, size=n)
    v = rng.uniform(0.0, 1.0, size=(n, m))
    r = rng.uniform(ratio * r_max, r_max, size=(n, m))
    r.flat[int(np.argmin(r))] = ratio * r_max
    r.flat[int(np.argmax(r))] = r_max
    return Instance.from_arrays(rho, v0, v, r, [LinearConstraint.cardinality(m, capacity)])
