"""Tests du backend Gurobi (ignorés sans gurobipy)."""

import pytest

pytest.importorskip("gurobipy")

from app.application.algorithms.branch_and_cut import branch_and_cut
from app.application.algorithms.cutting_plane import cutting_plane
from app.application.algorithms.oracle import brute_force
from app.domain.value_objects.exact_result import SolveStatus
from app.domain.value_objects.solve_config import MasterKind, Method, SolveConfig
from app.infrastructure.solvers.gurobi_backend import GurobiBackend

pytestmark = pytest.mark.solver


@pytest.fixture(scope="module")
def backend():
    return GurobiBackend()


def test_capabilities(backend):
    assert backend.capabilities.bilinear_objective
    assert backend.capabilities.lazy_constraints


@pytest.mark.parametrize("master", list(MasterKind))
def test_cutting_plane_t1(t1_c1, backend, master):
    result = cutting_plane(t1_c1, SolveConfig(master=master), backend)
    assert result.status is SolveStatus.OPTIMAL
    assert result.objective == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("master", list(MasterKind))
@pytest.mark.parametrize("segments", [0, 2])
def test_branch_and_cut_matches_enumeration(instance_factory, backend, master, segments):
    inst = instance_factory(404, n=4, m=6, scheme="mixed")
    cfg = SolveConfig(method=Method.BC, master=master, segments=segments)
    result = branch_and_cut(inst, cfg, backend)
    assert result.status is SolveStatus.OPTIMAL
    assert result.objective == pytest.approx(brute_force(inst).objective, abs=1e-5)
