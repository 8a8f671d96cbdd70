import numpy as np
import pytest

from fieldquanta.discrete import (INTERNAL, PARITY, PARITY_TIME, TIME_REVERSAL,
                                  DiscreteCandidate, classify, commutation_sign,
                                  predict_antiparticles)
from fieldquanta.errors import InvalidInput, NeitherCommutesNorAnticommutes
from fieldquanta.reps import ComplexStructureJ, RepData, real_type

K = np.array([[0.0, -1.0], [1.0, 0.0]])
CONJ = np.diag([1.0, -1.0])
J2 = ComplexStructureJ(K)


def so2_type():
    return real_type(RepData(dim=2, generators=[K]))


def real_scalar_type():
    return real_type(RepData(dim=1, generators=[]))


class TestCommutationSign:
    def test_conjugation_anticommutes(self):
        cand = DiscreteCandidate(INTERNAL, CONJ).validate()
        assert commutation_sign(cand, J2) == -1

    def test_identity_commutes(self):
        cand = DiscreteCandidate(PARITY, np.eye(2)).validate()
        assert commutation_sign(cand, J2) == +1

    def test_J_itself_commutes(self):
        cand = DiscreteCandidate(INTERNAL, K).validate()
        assert commutation_sign(cand, J2) == +1

    def test_neither_raises(self):
        bad = DiscreteCandidate(PARITY, np.diag([1.0, 3.0]))
        with pytest.raises(NeitherCommutesNorAnticommutes):
            commutation_sign(bad, J2)


class TestCandidateValidation:
    def test_involution_phase_recorded(self):
        cand = DiscreteCandidate(PARITY, 2.0 * np.eye(2)).validate()
        assert cand.involution_phase == pytest.approx(4.0)

    def test_non_involution_rejected(self):
        with pytest.raises(InvalidInput):
            DiscreteCandidate(PARITY, np.array([[1.0, 1.0], [0.0, 1.0]])).validate()

    def test_unknown_kind_rejected(self):
        with pytest.raises(InvalidInput):
            DiscreteCandidate("Chirality", np.eye(2))


def complex_kg_candidates():
    return [
        DiscreteCandidate(PARITY, np.eye(2)),          # phi(x,t) -> phi(-x,t)
        DiscreteCandidate(TIME_REVERSAL, CONJ),        # phi(x,t) -> phi*(x,-t)
        DiscreteCandidate(PARITY_TIME, np.eye(2)),     # phi(x,t) -> phi(-x,-t)
        DiscreteCandidate(PARITY_TIME, CONJ),          # phi(x,t) -> phi*(-x,-t)
        DiscreteCandidate(INTERNAL, CONJ),             # phi -> phi*
    ]


def schroedinger_candidates():
    # first-order dynamics: no complex-linear parity-time symmetry exists
    return [
        DiscreteCandidate(PARITY, np.eye(2)),
        DiscreteCandidate(TIME_REVERSAL, CONJ),
        DiscreteCandidate(PARITY_TIME, CONJ),
    ]


class TestClassify:
    def test_complex_kg(self):
        out = classify(complex_kg_candidates(), so2_type())
        assert {"P", "T", "C", "CPT"} <= out.labels
        assert out.has_antiparticles
        assert out.anti_isomorphic_sectors

    def test_schroedinger_field(self):
        out = classify(schroedinger_candidates(), so2_type())
        assert "P" in out.labels and "T" in out.labels
        assert "CPT" not in out.labels
        assert not out.anti_isomorphic_sectors
        assert out.has_antiparticles  # sectors exist; they are just not both physical

    def test_real_kg(self):
        cands = [DiscreteCandidate(PARITY, np.eye(1)),
                 DiscreteCandidate(TIME_REVERSAL, np.eye(1)),
                 DiscreteCandidate(PARITY_TIME, np.eye(1))]
        out = classify(cands, real_scalar_type())
        assert out.labels == {"P", "T", "PT", "CP", "CT", "CPT"}
        assert not out.has_antiparticles

    def test_stable_under_rescaling(self):
        rt = so2_type()
        base = classify(complex_kg_candidates(), rt)
        scaled = [DiscreteCandidate(c.kind, 1.7 * c.matrix) for c in complex_kg_candidates()]
        assert classify(scaled, rt).labels == base.labels

    def test_label_algebra_sign_product(self):
        # composed PT candidate carries the product of the P and T signs
        rt = so2_type()
        p = DiscreteCandidate(PARITY, np.eye(2)).validate()
        t = DiscreteCandidate(TIME_REVERSAL, CONJ).validate()
        s_p = commutation_sign(p, rt.J)
        s_t = commutation_sign(t, rt.J)
        composed = DiscreteCandidate(PARITY_TIME, p.matrix @ t.matrix).validate()
        assert commutation_sign(composed, rt.J) == s_p * s_t


class TestPredictAntiparticles:
    def test_complex_kg_true(self):
        rt = so2_type()
        assert predict_antiparticles(rt, classify(complex_kg_candidates(), rt))

    def test_schroedinger_false(self):
        rt = so2_type()
        assert not predict_antiparticles(rt, classify(schroedinger_candidates(), rt))

    def test_real_kg_false(self):
        rt = real_scalar_type()
        labels = classify([DiscreteCandidate(PARITY, np.eye(1)),
                           DiscreteCandidate(TIME_REVERSAL, np.eye(1)),
                           DiscreteCandidate(PARITY_TIME, np.eye(1))], rt)
        assert not predict_antiparticles(rt, labels)
