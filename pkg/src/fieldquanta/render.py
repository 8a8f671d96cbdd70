"""Human-readable rendering of report documents."""

from __future__ import annotations


def _fmt_floats(values, nd=6):
    return "[" + ", ".join(f"{v:.{nd}g}" for v in values) + "]"


def render_text(report: dict) -> str:
    lines = []
    prov = report["provenance"]
    lines.append(f"fieldquanta report: {report['name']}")
    tols = prov["tolerances"]
    lines.append(f"  tool {prov['version']}, seed {prov['seed']}, "
                 f"eps_rel {tols['eps_rel']:g}, eps_rank {tols['eps_rank']:g}")
    for conv in prov["conventions"]:
        lines.append(f"  convention: {conv}")
    for f in report["fields"]:
        lines.append("")
        lines.append(f"FIELD {f['name']} ({f['kind']}, {f['statistics']})")
        charges = ", ".join(f"{k}={v:g}" for k, v in f["charges"].items()) or "none"
        lines.append(f"  internal: dim {f['internal_dim']}, {f['group_label'] or 'trivial'}; "
                     f"charges: {charges}")
        rt_line = f"  real type: {f['real_type']} (commutant dim {f['commutant_dim']}"
        rt_line += ", quaternionic)" if f["quaternionic"] else ")"
        lines.append(rt_line)
        if f["sector_dim"] is not None:
            checks = f["sector_checks"]
            ok = all(checks.values())
            lines.append(f"  sectors: {f['sector_dim']} + {f['sector_dim']} conjugate "
                         f"complex-irreducible blocks ({'verified' if ok else 'FAILED'})")
        lines.append(f"  discrete labels: {' '.join(f['labels']) or 'none'}")
        yn = "yes" if f["has_antiparticles"] else "no"
        lines.append(f"  antiparticles: {yn} ({f['antiparticle_reason']})")
        dof = f["degrees_of_freedom"]
        lines.append(f"  degrees of freedom: physical {dof['physical']} "
                     f"(components {dof['field_components']}, "
                     f"constraint -{dof['constraint_removed']}, "
                     f"gauge -{dof['gauge_absorbed']})")
        modes = f.get("modes_check")
        if modes is not None:
            if not modes.get("applicable", False):
                lines.append("  lattice check: not applicable (no sector split)")
            else:
                lines.append(
                    f"  lattice check: antiparticle fraction "
                    f"{modes['antiparticle_fraction']:g} on {modes['sites']} sites "
                    f"({'agrees' if modes['agrees_with_labels'] else 'DISAGREES'} with labels)")
    br = report.get("breaking")
    if br is not None:
        lines.append("")
        lines.append(f"BREAKING (vacuum on {br['vacuum_field']} at {_fmt_floats(br['phi0'])})")
        if "masses_squared" in br:
            lines.append(f"  orbit radius {br['orbit_radius']:g}"
                         + (", continuously degenerate" if br["degenerate"] else ""))
            lines.append(f"  masses^2: {_fmt_floats(br['masses_squared'])}; "
                         f"Goldstone modes {br['massless_count']} "
                         f"(absorbed by gauge freedom: {br['goldstone_absorbed']})")
            lines.append(f"  physical scalar dof: {br['physical_scalar_dof']}")
        lines.append(f"  residual symmetry dimension: {br['residual_dim']}"
                     + (f"; unbroken factors: {', '.join(br['unbroken_factors'])}"
                        if br.get("unbroken_factors") else ""))
        for b in br.get("residual_blocks", []):
            kindtxt = "trivial" if b["trivial"] else b["real_type"]
            lines.append(f"  residual block: dim {b['dim']} ({kindtxt})")
    cons = report["consistency"]
    lines.append("")
    lines.append("consistency checks: " + ("all passed" if cons["all_passed"] else "FAILED"))
    for p in cons["problems"]:
        lines.append(f"  problem: {p}")
    return "\n".join(lines) + "\n"
