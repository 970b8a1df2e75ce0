"""Tests du plan coupant contre l'énumération exhaustive."""

import pytest

pytest.importorskip("mip")

from app.application.algorithms.cutting_plane import cutting_plane
from app.application.algorithms.oracle import brute_force
from app.core.exceptions import ConfigurationError
from app.domain.value_objects.cut import CutSet
from app.domain.value_objects.exact_result import SolveStatus
from app.domain.value_objects.solve_config import CutSelection, MasterKind, Method, SolveConfig
from app.infrastructure.solvers.mip_backend import MipBackend

pytestmark = pytest.mark.solver

TOL = 1e-5


@pytest.fixture(scope="module")
def backend():
    return MipBackend()


def test_t1_capacity_one(t1_c1, backend):
    result = cutting_plane(t1_c1, SolveConfig(method=Method.CP), backend)
    assert result.status is SolveStatus.OPTIMAL
    assert result.x == (1, 0)
    assert result.objective == pytest.approx(1.0, abs=1e-6)
    assert result.iterations >= 1
    assert result.bound >= result.objective - 1e-6


@pytest.mark.parametrize("cuts", [CutSet.OA, CutSet.OA_SC])
@pytest.mark.parametrize("scheme", ["cardinality", "mixed", "none"])
def test_matches_enumeration(instance_factory, backend, cuts, scheme):
    for seed in range(4):
        inst = instance_factory(seed, n=3, m=7, scheme=scheme)
        result = cutting_plane(inst, SolveConfig(cuts=cuts), backend)
        assert result.status is SolveStatus.OPTIMAL
        assert result.iterations <= 200
        assert result.objective == pytest.approx(brute_force(inst).objective, abs=TOL)


@pytest.mark.parametrize("segments", [1, 2, 4])
def test_segments_reach_same_optimum(instance_factory, backend, segments):
    inst = instance_factory(31, n=4, m=7, scheme="mixed")
    result = cutting_plane(inst, SolveConfig(segments=segments), backend)
    assert result.status is SolveStatus.OPTIMAL
    assert result.objective == pytest.approx(brute_force(inst).objective, abs=TOL)


def test_bound_history_is_monotone(instance_factory, backend):
    inst = instance_factory(5, n=3, m=8)
    result = cutting_plane(inst, SolveConfig(), backend)
    history = result.bound_history
    assert 0 < len(history) <= result.iterations
    for before, after in zip(history, history[1:]):
        assert after >= before - 1e-6 * max(1.0, abs(before))


def test_add_all_cuts(instance_factory, backend):
    inst = instance_factory(8, n=3, m=6, scheme="general")
    cfg = SolveConfig(cuts=CutSet.OA_SC, cut_selection=CutSelection.ALL)
    result = cutting_plane(inst, cfg, backend)
    assert result.objective == pytest.approx(brute_force(inst).objective, abs=TOL)
    assert result.cuts_added > 0


def test_bilinear_request_falls_back_on_cbc(t1_c1, backend):
    result = cutting_plane(t1_c1, SolveConfig(master=MasterKind.BI), backend)
    assert result.status is SolveStatus.OPTIMAL
    assert result.objective == pytest.approx(1.0, abs=1e-6)


def test_too_many_segments(t1, backend):
    with pytest.raises(ConfigurationError):
        cutting_plane(t1, SolveConfig(segments=3), backend)


def test_unconstrained_t1(t1, backend):
    result = cutting_plane(t1, SolveConfig(cuts=CutSet.OA_SC), backend)
    assert result.x == (1, 0)
    assert result.gap == pytest.approx(0.0, abs=1e-5)
