"""Built-in theory fixtures and the spec-file reader/writer.

Field entries carry the purely internal representation only: spinor and
vector indices enter through the `kind` tag and the degree-of-freedom
bookkeeping, never through the generator matrices. A Dirac entry is encoded
as a Majorana field with a complex internal degree of freedom.

Charge values on u(1) factors follow conventional hypercharge assignments in
the normalization where the Higgs doublet has charge +1 (so its residual
generator is proportional to sigma_z - 1); these numeric values are an
editorial choice, not forced by the classification.

Spec documents serialize as JSON under the versioned schema
"fieldquanta-spec/1"; reports use "fieldquanta-report/1". Matrices are
nested row-major arrays kept at full decimal precision, so save followed by
load is the identity on valid specs.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

import numpy as np

from .algebras import (adjoint_generators, kron_factor_generators, realified,
                       so_generators, su2_generators, su3_generators,
                       u1_charge_generator)
from .breaking import QuarticPotential
from .discrete import (INTERNAL, KINDS, PARITY, PARITY_TIME, TIME_REVERSAL,
                       DiscreteCandidate)
from .errors import InvalidInput, ParseError, UnknownName, ValidationError
from .kernel import DEFAULT_TOL
from .modes import RELATIVISTIC, SCHROEDINGER, Dispersion
from .reps import RepData

SPEC_SCHEMA = "fieldquanta-spec/1"
REPORT_SCHEMA = "fieldquanta-report/1"

SCALAR = "Scalar"
WEYL_LEFT = "WeylLeft"
WEYL_RIGHT = "WeylRight"
MAJORANA = "Majorana"
VECTOR = "Vector"
GAUGE_VECTOR = "GaugeVector"
FIELD_KINDS = (SCALAR, WEYL_LEFT, WEYL_RIGHT, MAJORANA, VECTOR, GAUGE_VECTOR)

BOSE = "Bose"
FERMI = "Fermi"
_EXPECTED_STATISTICS = {
    SCALAR: BOSE, VECTOR: BOSE, GAUGE_VECTOR: BOSE,
    WEYL_LEFT: FERMI, WEYL_RIGHT: FERMI, MAJORANA: FERMI,
}

BUILTIN_NAMES = [
    "real-kg", "complex-kg", "kg-internal(3)", "weyl-l", "weyl-r", "dirac",
    "majorana", "real-vector", "complex-vector", "gauge(su2)", "gauge(su3)",
    "schroedinger", "standard-model", "higgs-sector",
]


@dataclass
class SymmetryFactor:
    """One shared symmetry factor: its abstract algebra and adjoint action."""

    name: str
    algebra_dim: int
    adjoint: list
    gauged: bool = True


@dataclass
class FieldSpec:
    name: str
    kind: str
    statistics: str
    internal: RepData
    charges: dict = field(default_factory=dict)
    discrete_candidates: list = field(default_factory=list)
    potential: QuarticPotential | None = None
    dispersion: Dispersion = field(default_factory=lambda: Dispersion(RELATIVISTIC, 1.0))
    factor_labels: list = field(default_factory=list)
    gauge_algebra: str | None = None


@dataclass
class TheorySpec:
    name: str
    fields: list
    factors: dict = field(default_factory=dict)
    vacuum: tuple | None = None  # (field name, phi0 array)

    def field_named(self, name: str) -> FieldSpec:
        for f in self.fields:
            if f.name == name:
                return f
        raise UnknownName(f"no field named {name!r}")

    def validate(self, tol=DEFAULT_TOL) -> "TheorySpec":
        problems = []
        seen = set()
        for f in self.fields:
            where = f"field {f.name!r}"
            if f.name in seen:
                problems.append(f"{where}: duplicate field name")
            seen.add(f.name)
            if f.kind not in FIELD_KINDS:
                problems.append(f"{where}: unknown kind {f.kind!r}")
            elif _EXPECTED_STATISTICS[f.kind] != f.statistics:
                problems.append(
                    f"{where}: {f.kind} must be {_EXPECTED_STATISTICS[f.kind]}, got {f.statistics}")
            for pair in f.internal.closure_violations(tol):
                problems.append(
                    f"{where}: generators {pair[0]} and {pair[1]} have a commutator outside the span")
            if f.factor_labels:
                if len(f.factor_labels) != len(f.internal.generators):
                    problems.append(f"{where}: factor_labels length mismatch")
                for label in f.factor_labels:
                    if label not in self.factors:
                        problems.append(f"{where}: unknown factor {label!r}")
            for q_factor in f.charges:
                if self.factors and q_factor not in self.factors:
                    problems.append(f"{where}: charge on unknown factor {q_factor!r}")
            for cand in f.discrete_candidates:
                try:
                    cand.validate(tol)
                except InvalidInput as err:
                    problems.append(f"{where}: bad {cand.kind} candidate: {err}")
                if cand.matrix.shape != (f.internal.dim, f.internal.dim):
                    problems.append(f"{where}: {cand.kind} candidate has wrong size")
            if f.potential is not None and f.potential.dim != f.internal.dim:
                problems.append(f"{where}: potential dimension != internal dimension")
        if self.vacuum is not None:
            vac_field, phi0 = self.vacuum
            if not any(f.name == vac_field for f in self.fields):
                problems.append(f"vacuum names missing field {vac_field!r}")
            else:
                target = self.field_named(vac_field)
                if np.asarray(phi0).shape != (target.internal.dim,):
                    problems.append("vacuum vector has the wrong dimension")
        if problems:
            raise ValidationError(problems)
        return self


def conjugation_matrix(n_complex: int) -> np.ndarray:
    """Realified entrywise conjugation on C^n: (re, im) -> (re, -im)."""
    return np.diag([1.0] * n_complex + [-1.0] * n_complex)


def _complex_boson_candidates(n_complex: int) -> list:
    eye = np.eye(2 * n_complex)
    conj = conjugation_matrix(n_complex)
    return [
        DiscreteCandidate(PARITY, eye),
        DiscreteCandidate(TIME_REVERSAL, conj),
        DiscreteCandidate(PARITY_TIME, eye),
        DiscreteCandidate(PARITY_TIME, conj),
        DiscreteCandidate(INTERNAL, conj),
    ]


def _weyl_candidates(n_complex: int) -> list:
    # a lone Weyl field has no parity of its own: the parity-kind candidate
    # carries internal conjugation, and only the parity-time map is linear
    eye = np.eye(2 * n_complex)
    conj = conjugation_matrix(n_complex)
    return [
        DiscreteCandidate(PARITY, conj),
        DiscreteCandidate(TIME_REVERSAL, conj),
        DiscreteCandidate(PARITY_TIME, eye),
    ]


def _real_candidates(dim: int) -> list:
    eye = np.eye(dim)
    return [DiscreteCandidate(PARITY, eye),
            DiscreteCandidate(TIME_REVERSAL, eye),
            DiscreteCandidate(PARITY_TIME, eye)]


def _schroedinger_candidates() -> list:
    # first-order dynamics: time reversal and parity-time require conjugation,
    # and no complex-linear parity-time exists
    conj = conjugation_matrix(1)
    return [DiscreteCandidate(PARITY, np.eye(2)),
            DiscreteCandidate(TIME_REVERSAL, conj),
            DiscreteCandidate(PARITY_TIME, conj)]


def _u1_rep(q: float, n_complex: int, label: str = "u(1)") -> RepData:
    return RepData(dim=2 * n_complex, generators=[u1_charge_generator(q, n_complex)],
                   group_label=label, charge=q)


def _standard_factors() -> dict:
    return {
        "su3": SymmetryFactor("su3", 8, adjoint_generators(su3_generators())),
        "su2": SymmetryFactor("su2", 3, adjoint_generators(su2_generators())),
        "u1": SymmetryFactor("u1", 1, [np.zeros((1, 1))]),
    }


def _higgs_field(charge: float = 1.0) -> FieldSpec:
    gens = realified(su2_generators()) + [u1_charge_generator(charge, 2)]
    rep = RepData(dim=4, generators=gens, group_label="su(2)+u(1)", charge=charge)
    return FieldSpec(
        name="higgs", kind=SCALAR, statistics=BOSE, internal=rep,
        charges={"u1": charge},
        discrete_candidates=_complex_boson_candidates(2),
        potential=QuarticPotential(alpha=-1.0, beta=0.5, dim=4),
        factor_labels=["su2", "su2", "su2", "u1"])


def _single(name: str, f: FieldSpec, factors=None, vacuum=None) -> TheorySpec:
    return TheorySpec(name=name, fields=[f], factors=factors or {}, vacuum=vacuum)


def _builtin_simple(name: str) -> TheorySpec:
    if name == "real-kg":
        f = FieldSpec("real-kg", SCALAR, BOSE,
                      RepData(dim=1, generators=[], group_label="trivial"),
                      discrete_candidates=_real_candidates(1))
        return _single(name, f)
    if name == "complex-kg":
        f = FieldSpec("complex-kg", SCALAR, BOSE, _u1_rep(1.0, 1),
                      charges={"u1": 1.0},
                      discrete_candidates=_complex_boson_candidates(1))
        return _single(name, f)
    if name == "weyl-l" or name == "weyl-r":
        kind = WEYL_LEFT if name == "weyl-l" else WEYL_RIGHT
        f = FieldSpec(name, kind, FERMI, _u1_rep(1.0, 1),
                      charges={"u1": 1.0}, discrete_candidates=_weyl_candidates(1),
                      dispersion=Dispersion(RELATIVISTIC, 0.0))
        return _single(name, f)
    if name == "dirac":
        f = FieldSpec("dirac", MAJORANA, FERMI, _u1_rep(1.0, 1),
                      charges={"u1": 1.0},
                      discrete_candidates=_complex_boson_candidates(1))
        return _single(name, f)
    if name == "majorana":
        f = FieldSpec("majorana", MAJORANA, FERMI,
                      RepData(dim=1, generators=[], group_label="trivial"),
                      discrete_candidates=_real_candidates(1))
        return _single(name, f)
    if name == "real-vector":
        f = FieldSpec("real-vector", VECTOR, BOSE,
                      RepData(dim=1, generators=[], group_label="trivial"),
                      discrete_candidates=_real_candidates(1))
        return _single(name, f)
    if name == "complex-vector":
        f = FieldSpec("complex-vector", VECTOR, BOSE, _u1_rep(1.0, 1),
                      charges={"u1": 1.0},
                      discrete_candidates=_complex_boson_candidates(1))
        return _single(name, f)
    if name == "schroedinger":
        f = FieldSpec("schroedinger", SCALAR, BOSE, _u1_rep(1.0, 1),
                      charges={"u1": 1.0},
                      discrete_candidates=_schroedinger_candidates(),
                      dispersion=Dispersion(SCHROEDINGER, 1.0))
        return _single(name, f)
    raise UnknownName(name)


def builtin(name: str) -> TheorySpec:
    """A fully populated TheorySpec for one of the documented builtin names."""
    m = re.fullmatch(r"kg-internal\((\d+)\)", name)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise UnknownName(f"kg-internal needs N >= 2, got {n}")
        f = FieldSpec(name, SCALAR, BOSE,
                      RepData(dim=n, generators=so_generators(n), group_label=f"so({n})"),
                      discrete_candidates=(_complex_boson_candidates(1) if n == 2
                                           else _real_candidates(n)))
        return _single(name, f)
    m = re.fullmatch(r"gauge\((su2|su3)\)", name)
    if m:
        alg = m.group(1)
        dim = 3 if alg == "su2" else 8
        f = FieldSpec(name, GAUGE_VECTOR, BOSE,
                      RepData(dim=dim, generators=so_generators(dim),
                              group_label=f"so({dim})"),
                      discrete_candidates=_real_candidates(dim),
                      dispersion=Dispersion(RELATIVISTIC, 0.0),
                      gauge_algebra=alg)
        return _single(name, f)
    if name == "higgs-sector":
        factors = {k: v for k, v in _standard_factors().items() if k != "su3"}
        higgs = _higgs_field()
        return TheorySpec(name=name, fields=[higgs], factors=factors,
                          vacuum=("higgs", np.array([1.0, 0.0, 0.0, 0.0])))
    if name == "standard-model":
        return _standard_model()
    return _builtin_simple(name)


def _standard_model() -> TheorySpec:
    factors = _standard_factors()
    su2_r = realified(su2_generators())
    fields = []

    lepton_l = RepData(dim=4, generators=su2_r + [u1_charge_generator(-1.0, 2)],
                       group_label="su(2)+u(1)", charge=-1.0)
    fields.append(FieldSpec("left-leptons", WEYL_LEFT, FERMI, lepton_l,
                            charges={"u1": -1.0},
                            discrete_candidates=_weyl_candidates(2),
                            dispersion=Dispersion(RELATIVISTIC, 0.0),
                            factor_labels=["su2"] * 3 + ["u1"]))

    quark_l_gens = (kron_factor_generators([2, 3], 0, su2_generators())
                    + kron_factor_generators([2, 3], 1, su3_generators())
                    + [u1_charge_generator(1.0 / 3.0, 6)])
    quark_l = RepData(dim=12, generators=quark_l_gens,
                      group_label="su(2)+su(3)+u(1)", charge=1.0 / 3.0)
    fields.append(FieldSpec("left-quarks", WEYL_LEFT, FERMI, quark_l,
                            charges={"u1": 1.0 / 3.0},
                            discrete_candidates=_weyl_candidates(6),
                            dispersion=Dispersion(RELATIVISTIC, 0.0),
                            factor_labels=["su2"] * 3 + ["su3"] * 8 + ["u1"]))

    fields.append(FieldSpec("right-leptons", WEYL_RIGHT, FERMI,
                            _u1_rep(-2.0, 1), charges={"u1": -2.0},
                            discrete_candidates=_weyl_candidates(1),
                            dispersion=Dispersion(RELATIVISTIC, 0.0),
                            factor_labels=["u1"]))

    quark_r = RepData(dim=6, generators=realified(su3_generators())
                      + [u1_charge_generator(4.0 / 3.0, 3)],
                      group_label="su(3)+u(1)", charge=4.0 / 3.0)
    fields.append(FieldSpec("right-quarks", WEYL_RIGHT, FERMI, quark_r,
                            charges={"u1": 4.0 / 3.0},
                            discrete_candidates=_weyl_candidates(3),
                            dispersion=Dispersion(RELATIVISTIC, 0.0),
                            factor_labels=["su3"] * 8 + ["u1"]))

    fields.append(FieldSpec("gauge-su2", GAUGE_VECTOR, BOSE,
                            RepData(dim=3, generators=[np.asarray(g) for g in
                                                       factors["su2"].adjoint],
                                    group_label="su(2) adjoint"),
                            discrete_candidates=_real_candidates(3),
                            dispersion=Dispersion(RELATIVISTIC, 0.0),
                            factor_labels=["su2"] * 3, gauge_algebra="su2"))
    fields.append(FieldSpec("gauge-su3", GAUGE_VECTOR, BOSE,
                            RepData(dim=8, generators=[np.asarray(g) for g in
                                                       factors["su3"].adjoint],
                                    group_label="su(3) adjoint"),
                            discrete_candidates=_real_candidates(8),
                            dispersion=Dispersion(RELATIVISTIC, 0.0),
                            factor_labels=["su3"] * 8, gauge_algebra="su3"))
    fields.append(FieldSpec("gauge-u1", GAUGE_VECTOR, BOSE,
                            RepData(dim=1, generators=[], group_label="u(1) adjoint"),
                            discrete_candidates=_real_candidates(1),
                            dispersion=Dispersion(RELATIVISTIC, 0.0),
                            gauge_algebra="u1"))

    fields.append(_higgs_field())
    return TheorySpec(name="standard-model", fields=fields, factors=factors,
                      vacuum=("higgs", np.array([1.0, 0.0, 0.0, 0.0])))


# ---------------------------------------------------------------------------
# JSON spec documents


def _matrix_list(mats) -> list:
    return [np.asarray(m).tolist() for m in mats]


def to_document(spec: TheorySpec) -> dict:
    doc = {
        "schema": SPEC_SCHEMA,
        "name": spec.name,
        "factors": {
            name: {"algebra_dim": f.algebra_dim,
                   "adjoint": _matrix_list(f.adjoint),
                   "gauged": f.gauged}
            for name, f in spec.factors.items()},
        "fields": [],
        "vacuum": None,
    }
    for f in spec.fields:
        entry = {
            "name": f.name,
            "kind": f.kind,
            "statistics": f.statistics,
            "internal": {
                "dim": f.internal.dim,
                "group_label": f.internal.group_label,
                "charge": f.internal.charge,
                "generators": _matrix_list(f.internal.generators),
            },
            "charges": dict(f.charges),
            "factor_labels": list(f.factor_labels),
            "discrete_candidates": [
                {"kind": c.kind, "matrix": np.asarray(c.matrix).tolist()}
                for c in f.discrete_candidates],
            "potential": (None if f.potential is None else
                          {"alpha": f.potential.alpha, "beta": f.potential.beta}),
            "dispersion": {"kind": f.dispersion.kind, "mass": f.dispersion.mass},
            "gauge_algebra": f.gauge_algebra,
        }
        doc["fields"].append(entry)
    if spec.vacuum is not None:
        doc["vacuum"] = {"field": spec.vacuum[0],
                         "phi0": np.asarray(spec.vacuum[1]).tolist()}
    return doc


def _need(doc: dict, key: str, path: str):
    if key not in doc:
        raise ParseError(f"missing key {key!r}", path)
    return doc[key]


def _parse_matrix(obj, path: str, rows: int | None = None) -> np.ndarray:
    try:
        m = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as err:
        raise ParseError(f"not a numeric matrix: {err}", path)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ParseError(f"expected a square matrix, got shape {m.shape}", path)
    if rows is not None and m.shape[0] != rows:
        raise ParseError(f"expected {rows}x{rows}, got {m.shape[0]}x{m.shape[1]}", path)
    return m


def from_document(doc: dict) -> TheorySpec:
    """Parse a spec document. Structural problems raise ParseError with the
    offending path; semantic invariants are checked by TheorySpec.validate."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    schema = _need(doc, "schema", "$")
    if schema != SPEC_SCHEMA:
        raise ParseError(f"unsupported schema {schema!r}", "$.schema")
    name = _need(doc, "name", "$")
    factors = {}
    for fname, fdoc in doc.get("factors", {}).items():
        path = f"$.factors.{fname}"
        dim = _need(fdoc, "algebra_dim", path)
        adjoint = [_parse_matrix(m, f"{path}.adjoint[{i}]", dim)
                   for i, m in enumerate(_need(fdoc, "adjoint", path))]
        factors[fname] = SymmetryFactor(fname, dim, adjoint,
                                        gauged=bool(fdoc.get("gauged", True)))
    fields = []
    for i, fdoc in enumerate(_need(doc, "fields", "$")):
        path = f"$.fields[{i}]"
        idoc = _need(fdoc, "internal", path)
        dim = _need(idoc, "dim", f"{path}.internal")
        gens = [_parse_matrix(g, f"{path}.internal.generators[{k}]", dim)
                for k, g in enumerate(idoc.get("generators", []))]
        internal = RepData(dim=dim, generators=gens,
                           group_label=idoc.get("group_label", ""),
                           charge=idoc.get("charge"))
        cands = []
        for k, cdoc in enumerate(fdoc.get("discrete_candidates", [])):
            cpath = f"{path}.discrete_candidates[{k}]"
            kind = _need(cdoc, "kind", cpath)
            if kind not in KINDS:
                raise ParseError(f"unknown candidate kind {kind!r}", cpath)
            cands.append(DiscreteCandidate(kind, _parse_matrix(
                _need(cdoc, "matrix", cpath), cpath)))
        pot = fdoc.get("potential")
        potential = None
        if pot is not None:
            try:
                potential = QuarticPotential(alpha=float(_need(pot, "alpha", f"{path}.potential")),
                                             beta=float(_need(pot, "beta", f"{path}.potential")),
                                             dim=dim)
            except InvalidInput as err:
                raise ParseError(str(err), f"{path}.potential")
        ddoc = fdoc.get("dispersion", {"kind": RELATIVISTIC, "mass": 1.0})
        if ddoc.get("kind") not in (RELATIVISTIC, SCHROEDINGER):
            raise ParseError(f"unknown dispersion {ddoc.get('kind')!r}", f"{path}.dispersion")
        fields.append(FieldSpec(
            name=_need(fdoc, "name", path),
            kind=_need(fdoc, "kind", path),
            statistics=_need(fdoc, "statistics", path),
            internal=internal,
            charges={k: float(v) for k, v in fdoc.get("charges", {}).items()},
            discrete_candidates=cands,
            potential=potential,
            dispersion=Dispersion(ddoc["kind"], float(ddoc.get("mass", 1.0))),
            factor_labels=list(fdoc.get("factor_labels", [])),
            gauge_algebra=fdoc.get("gauge_algebra")))
    vacuum = None
    vdoc = doc.get("vacuum")
    if vdoc is not None:
        phi0 = np.asarray(_need(vdoc, "phi0", "$.vacuum"), dtype=float)
        if phi0.ndim != 1:
            raise ParseError("phi0 must be a flat vector", "$.vacuum.phi0")
        vacuum = (_need(vdoc, "field", "$.vacuum"), phi0)
    return TheorySpec(name=name, fields=fields, factors=factors, vacuum=vacuum)


def save(spec: TheorySpec, path: str):
    spec.validate()
    with open(path, "w") as fh:
        json.dump(to_document(spec), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load(path: str) -> TheorySpec:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err}")
    spec = from_document(doc)
    spec.validate()
    return spec


def specs_equal(a: TheorySpec, b: TheorySpec) -> bool:
    return to_document(a) == to_document(b)
