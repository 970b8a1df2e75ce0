"""Tests de l'entité Instance et de sa lecture JSON."""

import numpy as np
import pytest
from pydantic import ValidationError

from app.core.exceptions import InstanceError
from app.domain.entities.instance import Instance, LinearConstraint
from app.domain.services.choice_model import eval_phi
from app.infrastructure.storage.instance_store import dumps_canonical, parse_instance


def _document(**overrides):
    doc = {
        "n": 2,
        "m": 2,
        "rho": [0.5, 0.5],
        "v0": [1.0, 2.0],
        "v": [[1.0, 3.0], [2.0, 2.0]],
        "r": [[2.0, 1.0], [2.0, 1.0]],
        "constraints": [],
    }
    doc.update(overrides)
    return doc


class TestDerivedArrays:
    def test_revenue_shift(self, t1):
        assert np.allclose(t1.r_max_class, [2.0, 2.0])
        assert np.allclose(t1.r_shift, [[0.0, 1.0], [0.0, 1.0]])
        assert (t1.r_shift >= 0).all()

    def test_constant_revenue(self, t1):
        assert t1.constant_revenue == pytest.approx(2.0)

    def test_arrays_are_read_only(self, t1):
        with pytest.raises(ValueError):
            t1.v_matrix[0, 0] = 10.0

    def test_empty_product_set(self):
        inst = Instance(n=1, m=0, rho=(1.0,), v0=(1.0,), v=((),), r=((),))
        assert inst.r_max_class.tolist() == [0.0]
        assert inst.constant_revenue == 0.0


class TestValidation:
    def test_cardinality_shortcut(self):
        inst = Instance.model_validate(_document(constraints=[{"cardinality": 1}]))
        assert inst.constraints[0].beta == (1.0, 1.0)
        assert inst.cardinality_only() == 1

    def test_general_constraint_is_not_cardinality(self):
        inst = Instance.model_validate(_document(constraints=[{"beta": [0.5, 1.0], "alpha": 1.0}]))
        assert inst.cardinality_only() is None
        assert not inst.is_unconstrained()

    @pytest.mark.parametrize(
        "overrides",
        [
            {"v0": [0.0, 2.0]},
            {"v": [[1.0, 3.0]]},
            {"r": [[2.0, -1.0], [2.0, 1.0]]},
            {"rho": [0.0, 0.0]},
            {"constraints": [{"beta": [1.0], "alpha": 1.0}]},
            {"constraints": [{"beta": [1.0, 1.0], "alpha": 0.0}]},
        ],
    )
    def test_invalid_documents(self, overrides):
        with pytest.raises(ValidationError):
            Instance.model_validate(_document(**overrides))

    def test_negative_beta(self):
        with pytest.raises(ValidationError):
            LinearConstraint(beta=(1.0, -0.5), alpha=1.0)


class TestDocuments:
    def test_normalized(self):
        inst = Instance.model_validate(_document(rho=[1.0, 3.0]))
        assert sum(inst.normalized().rho) == pytest.approx(1.0)
        assert inst.normalized().rho == pytest.approx((0.25, 0.75))

    def test_document_round_trip(self, t1_c1):
        again = parse_instance(dumps_canonical(t1_c1.to_document()))
        assert again.to_document() == t1_c1.to_document()

    def test_canonical_text_is_stable(self, t1):
        assert dumps_canonical(t1.to_document()) == dumps_canonical(t1.to_document())
        assert dumps_canonical(t1.to_document()).endswith("\n")

    def test_parse_errors(self):
        with pytest.raises(InstanceError):
            parse_instance("{not json")
        with pytest.raises(InstanceError):
            parse_instance(_document(v0=[-1.0, 2.0]))

    def test_parse_with_normalization(self):
        inst = parse_instance(_document(rho=[2.0, 2.0]), normalize_rho=True)
        assert inst.rho == pytest.approx((0.5, 0.5))

    def test_unknown_key_is_rejected(self):
        with pytest.raises(InstanceError):
            parse_instance(_document(extra=1))


class TestPhiConvexity:
    @pytest.mark.parametrize("lam", [0.25, 0.5, 0.75])
    def test_phi_is_convex_between_assortments(self, instance_factory, lam):
        rng = np.random.default_rng(7)
        for seed in range(50):
            inst = instance_factory(seed, n=3, m=6, scheme="none")
            x = rng.integers(0, 2, size=inst.m).astype(float)
            y = rng.integers(0, 2, size=inst.m).astype(float)
            z = lam * x + (1.0 - lam) * y
            for i in range(inst.n):
                mixed = eval_phi(inst, i, z)
                bound = lam * eval_phi(inst, i, x) + (1.0 - lam) * eval_phi(inst, i, y)
                assert mixed <= bound + 1e-12, (seed, i)
