"""Registre des familles d'instances (paramètres des jeux de test publiés)."""

from app.core.exceptions import InstanceError
from app.domain.value_objects.benchmark import ConstraintScheme, FamilySpec, UtilityScheme

_SUBSETS_200_20 = ((5, 2), (10, 4), (25, 10), (50, 20))
_SUBSETS_100_100_5 = ((5, 2), (10, 4), (25, 10), (50, 20))


def _sen_cardinality(name: str, m: int, n: int, v0: tuple[float, ...], capacities: tuple[float, ...]) -> FamilySpec:
    return FamilySpec(
        name=name,
        n=n,
        m=m,
        utility=UtilityScheme.PRODUCT_U12,
        revenue_per_product=True,
        rho_uniform=True,
        v0_choices=v0,
        scheme=ConstraintScheme.CARDINALITY,
        capacities=capacities,
    )


def _sen_subsets(
    name: str, m: int, n: int, v0: tuple[float, ...], pairs: tuple[tuple[float, int], ...], subsets: int
) -> FamilySpec:
    return FamilySpec(
        name=name,
        n=n,
        m=m,
        utility=UtilityScheme.PRODUCT_U12,
        revenue_per_product=True,
        rho_uniform=True,
        v0_choices=v0,
        scheme=ConstraintScheme.SUBSETS,
        subset_pairs=pairs,
        subsets=subsets,
    )


def _graph(name: str, scheme: ConstraintScheme, **kwargs: object) -> FamilySpec:
    return FamilySpec(
        name=name,
        n=100,
        m=100,
        utility=UtilityScheme.GRAPH,
        v0_choices=(1.0, 2.0),
        scheme=scheme,
        **kwargs,
    )


def _uniform(name: str, m: int, n: int, v0: tuple[float, ...], scheme: ConstraintScheme, **kwargs: object) -> FamilySpec:
    return FamilySpec(
        name=name,
        n=n,
        m=m,
        utility=UtilityScheme.UNIFORM_U01,
        v0_choices=v0,
        scheme=scheme,
        **kwargs,
    )


FAMILIES: dict[str, FamilySpec] = {
    spec.name: spec
    for spec in (
        _sen_cardinality("Sen_200_20", 200, 20, (5.0, 10.0), (10, 20, 50, 100, 200)),
        _sen_cardinality("Sen_500_50", 500, 50, (10.0, 20.0), (20, 50, 100, 200, 500)),
        _graph("Sen_100_100", ConstraintScheme.CARDINALITY, capacities=(10, 20, 50, 100)),
        _sen_subsets("Sen_200_20_5", 200, 20, (10.0, 20.0), _SUBSETS_200_20 + ((100, 40),), 5),
        _sen_subsets("200_20_10", 200, 20, (10.0, 20.0), _SUBSETS_200_20, 10),
        _sen_subsets(
            "500_50_5", 500, 50, (10.0, 20.0), ((10, 4), (25, 10), (50, 20), (125, 50), (250, 100)), 5
        ),
        _sen_subsets(
            "500_50_10", 500, 50, (10.0, 20.0), ((5, 2), (10, 4), (25, 10), (50, 20), (125, 50)), 10
        ),
        _graph("100_100_5", ConstraintScheme.SUBSETS, subset_pairs=_SUBSETS_100_100_5, subsets=5),
        _graph("100_100_10", ConstraintScheme.SUBSETS, subset_pairs=((5, 2), (10, 4), (25, 10)), subsets=10),
        _uniform("1000_100", 1000, 100, (10.0, 20.0), ConstraintScheme.CARDINALITY, capacities=(25, 50, 100, 250, 500)),
        _uniform(
            "1000_100_5",
            1000,
            100,
            (10.0, 20.0),
            ConstraintScheme.SUBSETS,
            subset_pairs=((25, 10), (50, 20), (125, 50), (250, 100), (500, 200)),
            subsets=5,
        ),
        _uniform(
            "1000_100_10",
            1000,
            100,
            (10.0, 20.0),
            ConstraintScheme.SUBSETS,
            subset_pairs=((10, 4), (25, 10), (50, 20), (125, 50), (250, 100)),
            subsets=10,
        ),
        _uniform("100_1000", 100, 1000, (1.0, 2.0), ConstraintScheme.GENERAL, capacities=(10, 20, 50)),
        _uniform("200_2000", 200, 2000, (5.0, 10.0), ConstraintScheme.GENERAL, capacities=(10, 20, 50)),
        _uniform("200_4000", 200, 4000, (5.0, 10.0), ConstraintScheme.GENERAL, capacities=(10, 20, 50)),
        _uniform("100_5000", 100, 5000, (1.0, 2.0), ConstraintScheme.GENERAL, capacities=(10, 20, 50)),
    )
}


def get_family(name: str) -> FamilySpec:
    """
    Obtenir une famille par son nom.

    Raises:
        InstanceError: Si la famille est inconnue
    """
    try:
        return FAMILIES[name]
    except KeyError:
        raise InstanceError(f"Famille inconnue: {name}", {"known": sorted(FAMILIES)}) from None


def family_names() -> list[str]:
    return list(FAMILIES)
