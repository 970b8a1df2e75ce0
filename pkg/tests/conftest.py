"""Fixtures partagées : instance T1 et fabrique d'instances aléatoires."""

from typing import Callable, Optional

import numpy as np
import pytest

from app.domain.entities.instance import Instance, LinearConstraint

InstanceFactory = Callable[..., Instance]


def make_t1(capacity: Optional[int] = None) -> Instance:
    """Instance de référence à deux classes et deux produits."""
    constraints = [LinearConstraint.cardinality(2, capacity)] if capacity else []
    return Instance(
        n=2,
        m=2,
        rho=(0.5, 0.5),
        v0=(1.0, 2.0),
        v=((1.0, 3.0), (2.0, 2.0)),
        r=((2.0, 1.0), (2.0, 1.0)),
        constraints=tuple(constraints),
    )


def random_instance(
    seed: int,
    n: int = 3,
    m: int = 6,
    scheme: str = "cardinality",
    capacity: Optional[int] = None,
) -> Instance:
    """
    Instance aléatoire de petite taille.

    scheme : cardinality, general (un sac à dos beta ~ U[0,1]), none ou mixed
    (cardinalité et sac à dos).
    """
    rng = np.random.default_rng(seed)
    rho = rng.uniform(0.1, 1.0, size=n)
    v0 = rng.uniform(0.5, 3.0, size=n)
    v = rng.uniform(0.0, 2.0, size=(n, m))
    r = rng.uniform(1.0, 3.0, size=(n, m))
    capacity = capacity or max(1, m // 3)
    constraints: list[LinearConstraint] = []
    if scheme in ("cardinality", "mixed"):
        constraints.append(LinearConstraint.cardinality(m, capacity))
    if scheme in ("general", "mixed"):
        beta = rng.uniform(0.0, 1.0, size=m)
        alpha = max(float(beta.max()), 0.4 * float(beta.sum()))
        constraints.append(LinearConstraint(beta=tuple(float(b) for b in beta), alpha=alpha))
    return Instance.from_arrays(rho, v0, v, r, constraints)


@pytest.fixture
def t1() -> Instance:
    return make_t1()


@pytest.fixture
def t1_c1() -> Instance:
    return make_t1(capacity=1)


@pytest.fixture
def instance_factory() -> InstanceFactory:
    return random_instance
