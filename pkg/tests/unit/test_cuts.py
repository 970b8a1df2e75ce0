"""Tests des coupes OA, SC1, SC2 et des coupes agrégées par segments."""

import itertools

import numpy as np
import pytest

from app.domain.services.choice_model import eval_phi, phi_vector
from app.domain.services.cuts import (
    class_cuts,
    oa_cut,
    sc_cut_a,
    sc_cut_b,
    segment_cuts,
    segment_weights,
    target_values,
    violation,
)
from app.domain.value_objects.cut import CutKind, CutSet, CutTarget, SegmentPartition


class TestWorkedValues:
    def test_oa_at_zero(self, t1):
        cut = oa_cut(t1, 0, (0, 0))
        assert cut.a == pytest.approx((-1.0, -3.0))
        assert cut.b == pytest.approx(1.0)
        assert cut.rhs(np.array([1, 0])) == pytest.approx(0.0)

    def test_oa_at_first_product(self, t1):
        cut = oa_cut(t1, 0, (1, 0))
        assert cut.a == pytest.approx((-0.25, -0.75))
        assert cut.b == pytest.approx(0.75)

    def test_sc1_at_zero(self, t1):
        cut = sc_cut_a(t1, 0, (0, 0))
        assert cut.a == pytest.approx((-0.5, -0.75))
        assert cut.b == pytest.approx(1.0)
        assert cut.rhs(np.array([1, 0])) == pytest.approx(eval_phi(t1, 0, (1, 0)))

    def test_sc2_at_full(self, t1):
        cut = sc_cut_b(t1, 0, (1, 1))
        assert cut.a == pytest.approx((-0.05, -0.3))
        assert cut.b == pytest.approx(0.55)
        assert cut.rhs(np.array([1, 0])) == pytest.approx(0.5)

    def test_segment_t_cut(self, t1):
        part = SegmentPartition.contiguous(2, 1)
        cuts = segment_cuts(t1, part, (0, 0), [CutKind.OA])
        t_cut = next(c for c in cuts if c.target == CutTarget.t(0))
        assert t_cut.a == pytest.approx((-2.0, -4.0))
        assert t_cut.b == pytest.approx(2.0)

    def test_violation(self, t1):
        cut = oa_cut(t1, 0, (0, 0))
        assert violation(cut, (0, 0), 0.9) == pytest.approx(0.1)
        assert violation(cut, (0, 0), 1.0) == pytest.approx(0.0)
        assert violation(cut, (1, 1), 0.2) <= 0


@pytest.mark.parametrize("kind", list(CutKind))
def test_cuts_are_valid_and_tight(instance_factory, kind):
    """Φ_i(x) ≥ aᵀx + b sur tout x binaire, égalité en x̄."""
    rng = np.random.default_rng(42)
    points = [np.array(bits) for bits in itertools.product((0, 1), repeat=6)]
    for seed in range(8):
        inst = instance_factory(seed, n=3, m=6)
        for _ in range(6):
            x_bar = rng.integers(0, 2, size=inst.m)
            for cut in class_cuts(inst, x_bar, [kind]):
                i = cut.target.index
                assert cut.rhs(x_bar) == pytest.approx(eval_phi(inst, i, x_bar), abs=1e-12)
                for x in points:
                    assert eval_phi(inst, i, x) >= cut.rhs(x) - 1e-9


def test_cut_set_kinds():
    assert CutSet.OA.kinds() == (CutKind.OA,)
    assert CutSet.OA_SC.kinds() == (CutKind.OA, CutKind.SC1, CutKind.SC2)


def test_class_cut_subset(t1):
    cuts = class_cuts(t1, (1, 0), CutSet.OA_SC.kinds(), classes=[1])
    assert {c.target for c in cuts} == {CutTarget.y(1)}
    assert {c.kind for c in cuts} == set(CutKind)


def test_segment_cuts_are_valid(instance_factory):
    inst = instance_factory(7, n=5, m=5)
    part = SegmentPartition.contiguous(inst.n, 2)
    points = [np.array(bits) for bits in itertools.product((0, 1), repeat=inst.m)]
    x_bar = np.array([1, 0, 1, 0, 0])
    for cut in segment_cuts(inst, part, x_bar, CutSet.OA_SC.kinds()):
        for x in points:
            values = target_values(inst, x, part)
            assert values[cut.target] >= cut.rhs(x) - 1e-9
        assert cut.rhs(x_bar) == pytest.approx(target_values(inst, x_bar, part)[cut.target])


def test_zero_weight_targets_are_skipped(t1):
    """r'_i1 = 0 pour le premier produit : aucune cible z sur ce produit."""
    part = SegmentPartition.singleton(2)
    _, z_weights = segment_weights(t1, part)
    assert not z_weights[:, :, 0].any()
    cuts = segment_cuts(t1, part, (0, 0), [CutKind.OA])
    assert all(c.target.product != 0 for c in cuts if c.target.family == "z")
    assert CutTarget.z(0, 0) not in target_values(t1, (0, 0), part)


def test_target_values_per_class(t1):
    values = target_values(t1, (1, 0))
    assert values[CutTarget.y(0)] == pytest.approx(0.5)
    assert list(values.values()) == pytest.approx(list(phi_vector(t1, (1, 0))))


def test_partition():
    part = SegmentPartition.contiguous(5, 2)
    assert part.assignment == (0, 0, 0, 1, 1)
    assert [g.tolist() for g in part.groups()] == [[0, 1, 2], [3, 4]]
    with pytest.raises(ValueError):
        SegmentPartition.contiguous(2, 3)
    with pytest.raises(ValueError):
        SegmentPartition(L=2, assignment=(0, 0))
