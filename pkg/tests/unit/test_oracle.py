"""Tests de l'énumération exhaustive."""

import itertools

import numpy as np
import pytest

from app.application.algorithms.oracle import brute_force
from app.core.exceptions import OracleLimitError
from app.domain.entities.instance import Instance
from app.domain.services.choice_model import eval_revenue, is_feasible
from app.domain.value_objects.exact_result import SolveStatus


def _naive(inst):
    best, best_x = -1.0, None
    for x in itertools.product((0, 1), repeat=inst.m):
        if is_feasible(inst, x):
            value = eval_revenue(inst, x)
            if value > best + 1e-12:
                best, best_x = value, x
    return best, best_x


def test_t1_unconstrained(t1):
    result = brute_force(t1)
    assert result.status is SolveStatus.OPTIMAL
    assert result.x == (1, 0)
    assert result.objective == pytest.approx(1.0)
    assert result.iterations == 4


def test_t1_capacity_one(t1_c1):
    result = brute_force(t1_c1)
    assert result.x == (1, 0)
    assert result.objective == pytest.approx(1.0)


def test_refuses_large_instances():
    inst = Instance.from_arrays([1.0], [1.0], np.ones((1, 30)), np.ones((1, 30)))
    with pytest.raises(OracleLimitError):
        brute_force(inst)


def test_empty_product_set():
    inst = Instance(n=1, m=0, rho=(1.0,), v0=(1.0,), v=((),), r=((),))
    result = brute_force(inst)
    assert result.x == ()
    assert result.objective == 0.0


@pytest.mark.parametrize("scheme", ["cardinality", "general", "mixed", "none"])
def test_matches_naive_enumeration(instance_factory, scheme):
    for seed in range(5):
        inst = instance_factory(seed, n=3, m=7, scheme=scheme)
        value, _ = _naive(inst)
        result = brute_force(inst)
        assert result.objective == pytest.approx(value, rel=1e-9)
        assert is_feasible(inst, np.asarray(result.x))
        assert eval_revenue(inst, result.x) == pytest.approx(result.objective, rel=1e-9)


def test_high_block_is_enumerated(instance_factory):
    """m = 14 : deux produits passent par le parcours en code de Gray."""
    inst = instance_factory(21, n=2, m=14, scheme="mixed", capacity=5)
    value, _ = _naive(inst)
    assert brute_force(inst).objective == pytest.approx(value, rel=1e-9)
