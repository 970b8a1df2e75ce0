"""Tests des familles d'instances et du générateur."""

import numpy as np
import pytest

from app.core.exceptions import InstanceError
from app.domain.value_objects.benchmark import ConstraintScheme
from app.infrastructure.generators.families import FAMILIES, family_names, get_family
from app.infrastructure.generators.instance_generator import (
    generate,
    generate_family,
    generate_ratio_instance,
    with_size,
)
from app.infrastructure.storage.instance_store import dumps_canonical

ALL_FAMILIES = [
    "Sen_200_20",
    "Sen_500_50",
    "Sen_100_100",
    "Sen_200_20_5",
    "200_20_10",
    "500_50_5",
    "500_50_10",
    "100_100_5",
    "100_100_10",
    "1000_100",
    "1000_100_5",
    "1000_100_10",
    "100_1000",
    "200_2000",
    "200_4000",
    "100_5000",
]


def test_registry_is_complete():
    assert sorted(family_names()) == sorted(ALL_FAMILIES)


def test_unknown_family():
    with pytest.raises(InstanceError):
        get_family("Sen_1_1")


def test_published_parameters():
    sen = get_family("Sen_200_20")
    assert (sen.n, sen.m) == (20, 200)
    assert sen.v0_choices == (5.0, 10.0)
    assert sen.capacities == (10, 20, 50, 100, 200)
    large = get_family("1000_100")
    assert large.capacities == (25, 50, 100, 250, 500)
    assert large.v0_choices == (10.0, 20.0)
    assert not large.rho_uniform


def test_sen_instance():
    item = generate(with_size(get_family("Sen_200_20"), m=30), seed=1, v0=10.0, alpha=20)
    inst = item.instance
    assert (inst.n, inst.m) == (20, 30)
    assert inst.rho == pytest.approx(tuple([1 / 20] * 20))
    assert set(inst.v0) == {10.0}
    assert inst.cardinality_only() == 20
    # Revenu identique entre classes pour un produit
    assert np.allclose(inst.r_matrix, inst.r_matrix[0])
    assert ((inst.v_matrix >= 1) & (inst.v_matrix <= 2)).all()
    assert item.instance_id == "Sen_200_20_v0-10_a-20_00"


def test_subset_scheme():
    spec = with_size(get_family("Sen_200_20_5"), m=20, n=4)
    inst = generate(spec, seed=3).instance
    assert spec.scheme is ConstraintScheme.SUBSETS
    assert len(inst.constraints) == 1 + spec.subsets
    blocks = inst.beta_matrix[1:]
    assert (blocks.sum(axis=0) == 1).all()
    assert set(inst.alpha_vector[1:]) == {2.0}


def test_graph_scheme_is_sparse():
    inst = generate(with_size(get_family("Sen_100_100"), m=40, n=30), seed=5).instance
    density = float((inst.v_matrix > 0).mean())
    assert 0.0 < density < 0.3
    positive = inst.v_matrix[inst.v_matrix > 0]
    assert ((positive >= 1) & (positive <= 2)).all()


def test_general_scheme():
    inst = generate(with_size(get_family("100_1000"), m=50, n=5), seed=2).instance
    assert len(inst.constraints) == 1
    assert inst.cardinality_only() is None
    assert ((inst.beta_matrix >= 0) & (inst.beta_matrix <= 1)).all()


def test_determinism():
    spec = with_size(get_family("1000_100"), m=15, n=6)
    first = [dumps_canonical(item.instance.to_document()) for item in generate_family(spec, 7, 2)]
    second = [dumps_canonical(item.instance.to_document()) for item in generate_family(spec, 7, 2)]
    assert first == second
    other = [dumps_canonical(item.instance.to_document()) for item in generate_family(spec, 8, 2)]
    assert first != other


def test_family_cells_order():
    spec = with_size(get_family("Sen_200_20"), m=12, n=3, capacities=(2, 4))
    items = generate_family(spec, 0, 2)
    assert [(item.v0, item.alpha, item.k) for item in items] == [
        (5.0, 2, 0),
        (5.0, 2, 1),
        (5.0, 4, 0),
        (5.0, 4, 1),
        (10.0, 2, 0),
        (10.0, 2, 1),
        (10.0, 4, 0),
        (10.0, 4, 1),
    ]
    assert len({item.instance_id for item in items}) == len(items)


def test_missing_cell():
    with pytest.raises(InstanceError):
        generate("Sen_200_20", seed=0, v0=7.0)


def test_ratio_instance_is_exact():
    rng = np.random.default_rng(0)
    inst = generate_ratio_instance(3, 8, 0.4, 3, rng)
    assert inst.r_matrix.min() / inst.r_matrix.max() == pytest.approx(0.4)
    with pytest.raises(InstanceError):
        generate_ratio_instance(3, 8, 0.0, 3, rng)


@pytest.mark.parametrize("name", ALL_FAMILIES)
def test_every_family_generates_at_desk_scale(name):
    spec = FAMILIES[name]
    small = with_size(spec, m=min(spec.m, 12), n=min(spec.n, 4))
    inst = generate(small, seed=0).instance
    assert inst.m == small.m and inst.n == small.n
    assert sum(inst.rho) > 0
