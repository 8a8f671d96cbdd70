"""Quantum C/P/T labels from classical discrete-symmetry candidates.

A candidate is a parity, time-reversal, parity-time, or internal transform of
the classical field; only the internal matrix matters for classification, the
spacetime action is reduced to the `kind` tag. For a secretly complex field
each candidate either commutes or anticommutes with the complex structure J,
which decides whether it survives quantization as the plain label or picks up
a conjugation factor:

    internal, anticommuting            -> C
    parity, commuting / anticommuting  -> P  / CP
    time, anticommuting / commuting    -> T  / CT
    parity-time, anticommuting / commuting -> PT / CPT

For honestly real fields there are no antiparticle sectors; parity, time and
parity-time candidates grant P/T/PT directly and the conjugated labels come
for free.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInput, NeitherCommutesNorAnticommutes
from .kernel import DEFAULT_TOL, TolerancePolicy
from .reps import SECRETLY_COMPLEX, ComplexStructureJ, RealType

PARITY = "Parity"
TIME_REVERSAL = "TimeReversal"
PARITY_TIME = "ParityTime"
INTERNAL = "Internal"

KINDS = (PARITY, TIME_REVERSAL, PARITY_TIME, INTERNAL)
ALL_LABELS = ("C", "P", "T", "PT", "CP", "CT", "CPT")


@dataclass
class DiscreteCandidate:
    """One candidate transformation: its kind and internal-space matrix.

    The matrix must square to a multiple of the identity (the transformation
    is an involution up to a phase); that multiple is recorded as
    involution_phase.
    """

    kind: str
    matrix: np.ndarray
    involution_phase: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInput(f"unknown candidate kind {self.kind!r}")
        self.matrix = np.asarray(self.matrix, dtype=float)

    def validate(self, tol: TolerancePolicy = DEFAULT_TOL):
        n = self.matrix.shape[0]
        if self.matrix.shape != (n, n):
            raise InvalidInput("candidate matrix must be square")
        sq = self.matrix @ self.matrix
        phase = np.trace(sq) / n
        if abs(phase) <= tol.eps_rel:
            raise InvalidInput("candidate squares to zero, not a phase times identity")
        if np.linalg.norm(sq - phase * np.eye(n)) > tol.eps_rel * max(1.0, np.linalg.norm(sq)):
            raise InvalidInput("candidate squared is not a multiple of the identity")
        self.involution_phase = float(phase)
        return self


@dataclass
class DiscreteLabelSet:
    labels: set = field(default_factory=set)
    has_antiparticles: bool = False
    anti_isomorphic_sectors: bool = False


def commutation_sign(x: DiscreteCandidate, j: ComplexStructureJ,
                     tol: TolerancePolicy = DEFAULT_TOL) -> int:
    """+1 if the candidate commutes with J (complex-linear), -1 if it anticommutes.

    For a genuine symmetry of a real-irreducible secretly complex action one
    of the two always holds; anything else is reported as an error.
    """
    m, jm = x.matrix, j.J
    if m.shape != jm.shape:
        raise InvalidInput("candidate and J act on different spaces")
    bound = tol.eps_rel * max(1.0, np.linalg.norm(m) * np.linalg.norm(jm))
    if np.linalg.norm(m @ jm - jm @ m) <= bound:
        return +1
    if np.linalg.norm(m @ jm + jm @ m) <= bound:
        return -1
    raise NeitherCommutesNorAnticommutes(
        f"{x.kind} candidate neither commutes nor anticommutes with J")


_SECRETLY_COMPLEX_TABLE = {
    (PARITY, +1): "P", (PARITY, -1): "CP",
    (TIME_REVERSAL, -1): "T", (TIME_REVERSAL, +1): "CT",
    (PARITY_TIME, -1): "PT", (PARITY_TIME, +1): "CPT",
    (INTERNAL, -1): "C",
}

_HONESTLY_REAL_TABLE = {
    PARITY: ("P", "CP"),
    TIME_REVERSAL: ("T", "CT"),
    PARITY_TIME: ("PT", "CPT"),
}


def classify(candidates, rt: RealType, tol: TolerancePolicy = DEFAULT_TOL) -> DiscreteLabelSet:
    """Quantum discrete-symmetry labels for a field with the given real type."""
    labels = set()
    secretly = rt.tag == SECRETLY_COMPLEX
    if secretly and rt.J is None:
        raise InvalidInput("secretly complex classification needs J")
    for cand in candidates:
        cand.validate(tol)
        if secretly:
            sign = commutation_sign(cand, rt.J, tol)
            label = _SECRETLY_COMPLEX_TABLE.get((cand.kind, sign))
            if label is not None:
                labels.add(label)
        else:
            if cand.kind in _HONESTLY_REAL_TABLE:
                labels.update(_HONESTLY_REAL_TABLE[cand.kind])
    has_antiparticles = secretly
    anti_isomorphic = secretly and "CPT" in labels
    return DiscreteLabelSet(labels=labels, has_antiparticles=has_antiparticles,
                            anti_isomorphic_sectors=anti_isomorphic)


def predict_antiparticles(rt: RealType, labels: DiscreteLabelSet) -> bool:
    """Module-level prediction, cross-checked numerically by the lattice modes.

    Physical antiparticles require both a secretly complex internal action and
    a CPT label: without the latter the negative sector never enters the
    positive-frequency space.
    """
    return rt.tag == SECRETLY_COMPLEX and "CPT" in labels.labels
