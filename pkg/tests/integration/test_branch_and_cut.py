"""Tests du branch-and-cut sur CBC."""

import pytest

pytest.importorskip("mip")

from app.application.algorithms.branch_and_cut import branch_and_cut
from app.application.algorithms.oracle import brute_force
from app.core.exceptions import LazyUnsupportedError
from app.core.logging import get_logger
from app.domain.value_objects.cut import CutSet
from app.domain.value_objects.exact_result import SolveStatus
from app.domain.value_objects.solve_config import Method, SolveConfig
from app.infrastructure.solvers.base import BackendCapabilities, SolverBackend
from app.infrastructure.solvers.mip_backend import MipBackend

pytestmark = pytest.mark.solver

TOL = 1e-5


class NoLazyBackend(SolverBackend):
    name = "no-lazy"
    capabilities = BackendCapabilities(milp=True)

    def __init__(self) -> None:
        super().__init__(get_logger(__name__))

    @classmethod
    def is_available(cls) -> bool:
        return True

    def create_model(self, name: str):
        raise AssertionError("aucun modèle ne doit être créé")


@pytest.fixture(scope="module")
def backend():
    return MipBackend()


def test_t1_capacity_one(t1_c1, backend):
    result = branch_and_cut(t1_c1, SolveConfig(method=Method.BC), backend)
    assert result.status is SolveStatus.OPTIMAL
    assert result.x == (1, 0)
    assert result.objective == pytest.approx(1.0, abs=1e-6)
    assert result.cuts_added > 0


@pytest.mark.parametrize("strengthen", [True, False])
def test_matches_enumeration(instance_factory, backend, strengthen):
    for seed in range(4):
        inst = instance_factory(100 + seed, n=3, m=7, scheme="mixed")
        cfg = SolveConfig(method=Method.BC, cuts=CutSet.OA_SC, strengthen=strengthen)
        result = branch_and_cut(inst, cfg, backend)
        assert result.status is SolveStatus.OPTIMAL
        assert result.objective == pytest.approx(brute_force(inst).objective, abs=TOL)


def test_segments(instance_factory, backend):
    inst = instance_factory(77, n=4, m=6, scheme="cardinality")
    result = branch_and_cut(inst, SolveConfig(method=Method.BC, segments=2), backend)
    assert result.status is SolveStatus.OPTIMAL
    assert result.objective == pytest.approx(brute_force(inst).objective, abs=TOL)


def test_requires_lazy_constraints(t1):
    with pytest.raises(LazyUnsupportedError):
        branch_and_cut(t1, SolveConfig(method=Method.BC), NoLazyBackend())
