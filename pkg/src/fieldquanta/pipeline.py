"""Classification pipeline: TheorySpec in, SpectrumReport document out.

Per field the flow is irreducibility -> real type -> sector decomposition ->
discrete labels -> degree-of-freedom bookkeeping, optionally followed by the
lattice-mode cross-check. A theory with a vacuum additionally gets the
symmetry-breaking analysis: mass spectrum, stabilizer, and the residual
decomposition of the broken gauge algebra.

Reports are plain dicts with deterministic content for a fixed seed; they
serialize under the schema "fieldquanta-report/1".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import __version__
from .breaking import (hessian_spectrum, minimize, orbit_dimension, residual_decompose,
                       stabilizer)
from .catalog import (GAUGE_VECTOR, MAJORANA, REPORT_SCHEMA, SCALAR, VECTOR,
                      WEYL_LEFT, WEYL_RIGHT, FieldSpec, TheorySpec)
from .cxify import check_irreducible_complex, complexify, decompose, verify_conjugate_pair
from .discrete import classify as classify_discrete
from .discrete import predict_antiparticles
from .errors import InconsistencyError, InvalidInput
from .kernel import TolerancePolicy
from .modes import antiparticle_content
from .reps import SECRETLY_COMPLEX, is_real_irreducible, real_type

PARTICLE_CONVENTION = "particle sector = +i eigenspace of the internal complex structure"

_COMPONENTS = {SCALAR: 1, WEYL_LEFT: 2, WEYL_RIGHT: 2, MAJORANA: 2,
               VECTOR: 4, GAUGE_VECTOR: 4}


@dataclass
class RunConfig:
    seed: int = 0
    eps_rel: float | None = None
    eps_rank: float | None = None
    modes_sites: int | None = None
    modes_length: float = 2.0 * np.pi

    def tolerance(self) -> TolerancePolicy:
        base = TolerancePolicy()
        return TolerancePolicy(
            eps_rel=self.eps_rel if self.eps_rel is not None else base.eps_rel,
            eps_rank=self.eps_rank if self.eps_rank is not None else base.eps_rank)


def _degrees_of_freedom(f: FieldSpec) -> dict:
    components = _COMPONENTS[f.kind]
    naive = components * f.internal.dim
    constraint = 0
    gauge_absorbed = 0
    if f.kind in (VECTOR, GAUGE_VECTOR):
        constraint = f.internal.dim
    if f.kind == GAUGE_VECTOR:
        gauge_absorbed = f.internal.dim
    return {
        "field_components": naive,
        "constraint_removed": constraint,
        "gauge_absorbed": gauge_absorbed,
        "physical": naive - constraint - gauge_absorbed,
    }


def _antiparticle_reason(rt_tag: str, labels: set) -> str:
    if rt_tag != SECRETLY_COMPLEX:
        return "internal action admits no complex structure"
    if "CPT" in labels:
        return "complex structure exists and a complex-linear parity-time symmetry holds"
    return "no complex-linear parity-time symmetry"


def _classify_field(f: FieldSpec, cfg: RunConfig, tol: TolerancePolicy,
                    problems: list) -> dict:
    entry = {
        "name": f.name,
        "kind": f.kind,
        "statistics": f.statistics,
        "internal_dim": f.internal.dim,
        "group_label": f.internal.group_label,
        "charges": dict(sorted(f.charges.items())),
        "dispersion": {"kind": f.dispersion.kind, "mass": f.dispersion.mass},
    }
    if not is_real_irreducible(f.internal, tol):
        raise InvalidInput(
            f"field {f.name!r}: internal action is reducible; split it into irreducible fields")
    rt = real_type(f.internal, tol)
    entry["real_type"] = rt.tag
    entry["commutant_dim"] = rt.commutant_dim
    entry["quaternionic"] = rt.quaternionic_flag
    secret = rt.tag == SECRETLY_COMPLEX
    cx = complexify(f.internal)
    cx_irreducible = check_irreducible_complex(cx, tol)
    if cx_irreducible == secret:
        problems.append(f"{f.name}: complexification dichotomy violated")
    if secret:
        sectors = decompose(f.internal, rt.J, tol)
        plus_ok = check_irreducible_complex(sectors.rep_plus, tol, dim=sectors.sector_dim)
        minus_ok = check_irreducible_complex(sectors.rep_minus, tol, dim=sectors.sector_dim)
        pair_ok = verify_conjugate_pair(sectors, tol)
        if not (plus_ok and minus_ok and pair_ok):
            problems.append(f"{f.name}: sector decomposition failed its invariants")
        entry["complex_structure"] = rt.J.J.tolist()
        entry["sector_dim"] = sectors.sector_dim
        entry["sector_checks"] = {"plus_irreducible": plus_ok,
                                  "minus_irreducible": minus_ok,
                                  "conjugate_pair": pair_ok}
    else:
        entry["complex_structure"] = None
        entry["sector_dim"] = None
    labels = classify_discrete(f.discrete_candidates, rt, tol)
    predicted = predict_antiparticles(rt, labels)
    entry["labels"] = sorted(labels.labels)
    entry["sectors_split"] = secret
    entry["has_antiparticles"] = predicted
    entry["anti_isomorphic_sectors"] = labels.anti_isomorphic_sectors
    entry["antiparticle_reason"] = _antiparticle_reason(rt.tag, labels.labels)
    entry["degrees_of_freedom"] = _degrees_of_freedom(f)
    if cfg.modes_sites is not None:
        fraction = antiparticle_content(f, f.dispersion, cfg.modes_sites,
                                        cfg.modes_length, tol)
        if fraction is None:
            entry["modes_check"] = {"applicable": False}
        else:
            agrees = (fraction > 0) == predicted
            entry["modes_check"] = {
                "applicable": True,
                "sites": cfg.modes_sites,
                "length": cfg.modes_length,
                "antiparticle_fraction": fraction,
                "agrees_with_labels": agrees,
            }
            if not agrees:
                problems.append(
                    f"{f.name}: lattice antiparticle fraction {fraction} disagrees "
                    f"with the label prediction {predicted}")
    return entry


def _joint_broken_algebra(spec: TheorySpec, vacuum_field: FieldSpec):
    """Factor layout of the vacuum field's generators: ordered factor names
    and, per factor, the positions of its generators in the field's list."""
    order = []
    positions = {}
    for i, label in enumerate(vacuum_field.factor_labels):
        positions.setdefault(label, []).append(i)
        if label not in order:
            order.append(label)
    return order, positions


def _breaking_report(spec: TheorySpec, cfg: RunConfig, tol: TolerancePolicy,
                     problems: list) -> dict | None:
    if spec.vacuum is None:
        return None
    vac_name, phi0 = spec.vacuum
    f = spec.field_named(vac_name)
    out = {"vacuum_field": vac_name, "phi0": np.asarray(phi0).tolist()}
    if f.potential is not None:
        vac = minimize(f.potential, tol=tol)
        out["orbit_radius"] = vac.orbit_radius
        out["degenerate"] = vac.degenerate
        if abs(f.potential.norm2(np.asarray(phi0)) - vac.orbit_radius ** 2) > 1e-8:
            problems.append(f"{vac_name}: supplied vacuum is off the minimum orbit")
        spectrum = hessian_spectrum(f.potential, vac, tol)
        out["masses_squared"] = spectrum.masses_squared.tolist()
        out["massless_count"] = spectrum.massless_count
        gauged = all(spec.factors[label].gauged for label in f.factor_labels) \
            if f.factor_labels and spec.factors else False
        absorbed = orbit_dimension(f.internal, phi0, tol) if gauged else 0
        if spectrum.massless_count != orbit_dimension(f.internal, phi0, tol):
            problems.append(f"{vac_name}: Goldstone count != vacuum orbit dimension")
        out["goldstone_absorbed"] = absorbed
        out["physical_scalar_dof"] = f.internal.dim - absorbed
    stab = stabilizer(f.internal, phi0, tol)
    out["residual_dim"] = len(stab.basis)
    out["stabilizer_matrices"] = [b.tolist() for b in stab.basis]
    out["stabilizer_coefficients"] = stab.coefficients.T.tolist()
    untouched = sorted(set(spec.factors) - set(f.factor_labels))
    out["unbroken_factors"] = untouched
    if stab.basis and spec.factors and f.factor_labels:
        order, positions = _joint_broken_algebra(spec, f)
        joint_dim = sum(spec.factors[name].algebra_dim for name in order)
        basis_names = []
        for name in order:
            basis_names += [f"{name}[{i}]" for i in range(spec.factors[name].algebra_dim)]
        actions = []
        for col in range(stab.coefficients.shape[1]):
            blocks_ad = []
            for name in order:
                fac = spec.factors[name]
                ad = np.zeros((fac.algebra_dim, fac.algebra_dim))
                for local, pos in enumerate(positions[name]):
                    ad = ad + stab.coefficients[pos, col] * np.asarray(fac.adjoint[local])
                blocks_ad.append(ad)
            joint = np.zeros((joint_dim, joint_dim))
            at = 0
            for ad in blocks_ad:
                d = ad.shape[0]
                joint[at:at + d, at:at + d] = ad
                at += d
            actions.append(joint)
        blocks = residual_decompose(actions, tol)
        out["residual_blocks"] = [{
            "dim": b.dim,
            "trivial": b.trivial,
            "real_type": b.rtype.tag,
            "basis": b.basis.tolist(),
        } for b in blocks]
        out["joint_algebra_basis"] = basis_names
    return out


def classify_theory(spec: TheorySpec, cfg: RunConfig | None = None) -> dict:
    """Run the full pipeline and assemble the report document."""
    cfg = cfg or RunConfig()
    tol = cfg.tolerance()
    spec.validate(tol)
    problems: list = []
    fields = [_classify_field(f, cfg, tol, problems) for f in spec.fields]
    breaking = _breaking_report(spec, cfg, tol, problems)
    report = {
        "schema": REPORT_SCHEMA,
        "name": spec.name,
        "provenance": {
            "tool": "fieldquanta",
            "version": __version__,
            "seed": cfg.seed,
            "tolerances": {"eps_rel": tol.eps_rel, "eps_rank": tol.eps_rank},
            "conventions": [PARTICLE_CONVENTION,
                            "inner product normalization (L/M) * sum_k (1/w_k)"],
        },
        "fields": fields,
        "breaking": breaking,
        "consistency": {"problems": problems, "all_passed": not problems},
    }
    if problems:
        raise InconsistencyError("; ".join(problems))
    return report


# ---------------------------------------------------------------------------
# demo walkthroughs


def _fmt_matrix(m, indent="    "):
    m = np.asarray(m)
    rows = []
    for row in np.atleast_2d(m):
        rows.append(indent + "[" + "  ".join(f"{v:+.3f}" for v in row) + "]")
    return "\n".join(rows)


def _fmt_cmatrix(m, indent="    "):
    rows = []
    for row in np.atleast_2d(np.asarray(m)):
        rows.append(indent + "[" + "  ".join(f"{v.real:+.3f}{v.imag:+.3f}i" for v in row) + "]")
    return "\n".join(rows)


def demo_so2_vs_so3() -> str:
    from .catalog import builtin
    out = ["The two-dimensional rotation action admits a complex structure;",
           "the three-dimensional one does not. Quantization splits the first",
           "into conjugate sectors and leaves the second whole.", ""]
    rep2 = builtin("complex-kg").fields[0].internal
    rt = real_type(rep2)
    out.append("2d action: commutant dimension 2, complex structure J =")
    out.append(_fmt_matrix(rt.J.J))
    sectors = decompose(rep2, rt.J)
    out.append("eigenvectors of J (columns, +i then -i):")
    out.append(_fmt_cmatrix(np.hstack([sectors.basis_plus, sectors.basis_minus])))
    theta = 0.7
    from .kernel import expm
    k = np.array([[0.0, -1.0], [1.0, 0.0]])
    r = expm(k, theta)
    from .cxify import sector_action_phase
    plus = sector_action_phase(sectors, r, "plus")[0, 0]
    minus = sector_action_phase(sectors, r, "minus")[0, 0]
    out.append(f"rotation by {theta}: acts as {plus.real:+.4f}{plus.imag:+.4f}i on the +i sector,")
    out.append(f"                    {minus.real:+.4f}{minus.imag:+.4f}i on the -i sector")
    out.append("")
    rep3 = builtin("kg-internal(3)").fields[0].internal
    out.append(f"3d action: commutant dimension {real_type(rep3).commutant_dim},"
               " no complex structure;")
    out.append(f"complexification irreducible: {check_irreducible_complex(complexify(rep3))}")
    out.append("one species of particle with a 3-dimensional internal space.")
    return "\n".join(out) + "\n"


def demo_higgs() -> str:
    from .catalog import builtin
    spec = builtin("higgs-sector")
    f = spec.fields[0]
    phi0 = spec.vacuum[1]
    stab = stabilizer(f.internal, phi0)
    out = ["Quartic-potential vacuum of the doublet scalar at phi0 = "
           + np.array2string(phi0), "",
           "stabilizer of the vacuum inside su(2)+u(1): dimension "
           + str(len(stab.basis)),
           "coefficients over (su2[0], su2[1], su2[2], u1):",
           "    " + np.array2string(stab.coefficients[:, 0], precision=4),
           "stabilizer matrix (proportional to the action of 1 - q*sigma_z):",
           _fmt_matrix(stab.basis[0])]
    cfg = RunConfig()
    report = classify_theory(spec, cfg)
    blocks = report["breaking"]["residual_blocks"]
    out.append("")
    out.append("residual action on the su(2)+u(1) gauge algebra decomposes into:")
    for b in blocks:
        kindtxt = "trivial" if b["trivial"] else b["real_type"]
        out.append(f"  block of dimension {b['dim']}: {kindtxt}")
    out.append("the 2-dimensional block pairs two broken directions into a")
    out.append("charged boson and its antiparticle; the trivial blocks stay neutral.")
    return "\n".join(out) + "\n"


def demo_goldstone() -> str:
    from .breaking import QuarticPotential
    p = QuarticPotential(alpha=-1.0, beta=0.5, dim=3)
    vac = minimize(p)
    spec = hessian_spectrum(p, vac)
    out = ["Quartic potential with alpha = -1, beta = 0.5 on a 3d internal space:",
           f"vacuum orbit radius {vac.orbit_radius}, representative "
           + np.array2string(vac.phi0),
           "mass-squared spectrum: " + np.array2string(spec.masses_squared, precision=6),
           f"massless (Goldstone) modes: {spec.massless_count} = orbit dimension "
           f"{3 - 1}",
           "the radial mode keeps mass^2 = -4*alpha = 4."]
    return "\n".join(out) + "\n"


DEMOS = {
    "so2-vs-so3": demo_so2_vs_so3,
    "higgs": demo_higgs,
    "goldstone": demo_goldstone,
}


def demo(name: str) -> str:
    from .errors import UnknownName
    if name not in DEMOS:
        raise UnknownName(f"unknown demo {name!r}; available: {sorted(DEMOS)}")
    return DEMOS[name]()
