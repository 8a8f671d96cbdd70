"""End-to-end acceptance suite. Each test prints a pass/fail line with its
runtime in the terminal summary; tolerances are pinned here, not configurable."""

import json

import numpy as np

from fieldquanta.catalog import BUILTIN_NAMES, builtin
from fieldquanta.cli import main as cli_main
from fieldquanta.cxify import (check_irreducible_complex, complexify, decompose,
                               realify, sector_action_phase)
from fieldquanta.discrete import classify as classify_discrete
from fieldquanta.discrete import predict_antiparticles
from fieldquanta.kernel import expm
from fieldquanta.modes import Dispersion, RELATIVISTIC, SCHROEDINGER, antiparticle_content, frequency_split, inner_product, real_solution_from_positive
from fieldquanta.pipeline import RunConfig, classify_theory
from fieldquanta.reps import (RepData, complex_commutant_dim, find_complex_structure,
                              find_invariant_metric, real_type)

L = 2.0 * np.pi


def catalog_reps():
    """Unique internal representations across all builtin theories."""
    seen = {}
    for name in BUILTIN_NAMES:
        for f in builtin(name).fields:
            key = (f.internal.dim, f.internal.group_label,
                   len(f.internal.generators), f.internal.charge)
            seen.setdefault(key, f.internal)
    return list(seen.values())


def conjugated_variants(reps, count, seed=2024):
    rng = np.random.default_rng(seed)
    variants = []
    pool = [r for r in reps if r.dim >= 2]
    i = 0
    while len(variants) < count:
        rep = pool[i % len(pool)]
        i += 1
        s = None
        while s is None or np.linalg.cond(s) > 10.0:
            s = np.eye(rep.dim) + (0.3 / np.sqrt(rep.dim)) * rng.normal(
                size=(rep.dim, rep.dim))
        sinv = np.linalg.inv(s)
        variants.append(RepData(dim=rep.dim,
                                generators=[sinv @ g @ s for g in rep.generators],
                                group_label=rep.group_label + "~"))
    return variants


def test_criterion_1_so2_dichotomy(acceptance):
    with acceptance(1, "SO(2) split: sectors (1, -i)/(1, +i), rotations act by phases", 1.0):
        rep = builtin("complex-kg").fields[0].internal
        rt = real_type(rep)
        d = decompose(rep, rt.J)
        vplus = np.array([1.0, -1.0j]) / np.sqrt(2.0)
        vminus = np.array([1.0, +1.0j]) / np.sqrt(2.0)
        assert abs(abs(np.vdot(vplus, d.basis_plus[:, 0])) - 1.0) <= 1e-12
        assert abs(abs(np.vdot(vminus, d.basis_minus[:, 0])) - 1.0) <= 1e-12
        k = np.array([[0.0, -1.0], [1.0, 0.0]])
        for theta in (0.3, 1.7):
            r = expm(k, theta)
            plus = sector_action_phase(d, r, "plus")[0, 0]
            minus = sector_action_phase(d, r, "minus")[0, 0]
            assert abs(plus - np.exp(+1j * theta)) <= 1e-12
            assert abs(minus - np.exp(-1j * theta)) <= 1e-12


def test_criterion_2_so3_complex_irreducible(acceptance):
    with acceptance(2, "SO(3) complexification stays irreducible (commutant dim 1)", 1.0):
        rep = builtin("kg-internal(3)").fields[0].internal
        cx = complexify(rep)
        assert check_irreducible_complex(cx)
        assert complex_commutant_dim(cx.operators) == 1


def test_criterion_3_complexification_theorem_suite(acceptance):
    with acceptance(3, "dichotomy + conjugate-sector clauses over catalog and "
                       "20 conjugated variants, residuals <= 1e-8", 10.0):
        reps = catalog_reps()
        corpus = reps + conjugated_variants(reps, 20)
        assert len(corpus) >= len(reps) + 20
        for rep in corpus:
            j = find_complex_structure(rep)
            cx_irreducible = check_irreducible_complex(complexify(rep), dim=rep.dim)
            assert cx_irreducible == (j is None), rep.group_label
            if j is None:
                continue
            n = rep.dim
            assert np.linalg.norm(j.J @ j.J + np.eye(n)) <= 1e-8 * n
            for g in rep.generators:
                assert np.linalg.norm(j.J @ g - g @ j.J) <= 1e-8 * max(1.0, np.linalg.norm(g))
            d = decompose(rep, j)
            conj_plus = np.conj(d.basis_plus)
            assert np.linalg.norm(d.P_minus @ conj_plus - conj_plus) <= 1e-8
            t = d.basis_minus.conj().T @ conj_plus
            for gp, gm in zip(d.rep_plus, d.rep_minus):
                resid = np.linalg.norm(gm @ t - t @ np.conj(gp))
                assert resid <= 1e-8 * max(1.0, np.linalg.norm(gp))
            assert check_irreducible_complex(d.rep_plus, dim=d.sector_dim)
            assert check_irreducible_complex(d.rep_minus, dim=d.sector_dim)


def test_criterion_4_standard_model(acceptance):
    with acceptance(4, "standard model: stabilizer, residual blocks, gauge dof "
                       "(6, 16, 2), matter/gauge split", 5.0):
        report = classify_theory(builtin("standard-model"), RunConfig(seed=42))
        br = report["breaking"]
        assert br["residual_dim"] == 1
        stab = np.asarray(br["stabilizer_matrices"][0])
        q = 1.0
        expected = realify(1j * (np.eye(2) - q * np.diag([1.0, -1.0])))
        cosine = abs(np.sum(stab * expected)) / (
            np.linalg.norm(stab) * np.linalg.norm(expected))
        assert cosine >= 1.0 - 1e-9
        blocks = br["residual_blocks"]
        assert sorted(b["dim"] for b in blocks) == [1, 1, 2]
        two = next(b for b in blocks if b["dim"] == 2)
        assert two["real_type"] == "SecretlyComplex" and not two["trivial"]
        assert all(b["trivial"] for b in blocks if b["dim"] == 1)
        by_name = {f["name"]: f for f in report["fields"]}
        dof = [by_name[n]["degrees_of_freedom"]["physical"]
               for n in ("gauge-su2", "gauge-su3", "gauge-u1")]
        assert dof == [6, 16, 2]
        for name, f in by_name.items():
            if name.startswith("gauge"):
                assert f["real_type"] == "HonestlyReal"
                assert not f["has_antiparticles"]
            else:
                assert f["real_type"] == "SecretlyComplex"
                assert f["has_antiparticles"]


def test_criterion_5_mass_spectra(acceptance):
    with acceptance(5, "masses: unbroken exactly 2*alpha; broken 2 massless + 1 "
                       "massive, analytic vs finite differences <= 1e-6", 1.0):
        from fieldquanta.breaking import QuarticPotential, hessian_spectrum, minimize
        p = QuarticPotential(alpha=1.0, beta=0.7, dim=3)
        spec = hessian_spectrum(p, minimize(p))
        assert all(m == 2.0 for m in spec.masses_squared)
        p = QuarticPotential(alpha=-1.0, beta=0.5, dim=3)
        v = minimize(p)
        spec = hessian_spectrum(p, v)
        assert spec.massless_count == 2
        assert sum(m > 1e-8 for m in spec.masses_squared) == 1
        # independent central-difference oracle at the vacuum
        step = 1e-4
        n = 3
        fd = np.zeros((n, n))
        for i in range(n):
            for j in range(n):
                pp = v.phi0.copy(); pp[i] += step; pp[j] += step
                pm = v.phi0.copy(); pm[i] += step; pm[j] -= step
                mp = v.phi0.copy(); mp[i] -= step; mp[j] += step
                mm = v.phi0.copy(); mm[i] -= step; mm[j] -= step
                fd[i, j] = (p.value(pp) - p.value(pm) - p.value(mp) + p.value(mm)) / (4 * step ** 2)
        analytic = p.hessian(v.phi0)
        assert np.linalg.norm(analytic - fd) <= 1e-6 * max(1.0, np.linalg.norm(analytic))


def test_criterion_6_antiparticle_content(acceptance):
    with acceptance(6, "lattice antiparticle fraction: 0.5 relativistic, 0.0 "
                       "first-order, agreeing with the label prediction", 5.0):
        kg = builtin("complex-kg").fields[0]
        frac_kg = antiparticle_content(kg, Dispersion(RELATIVISTIC, 1.0), 64, L)
        assert abs(frac_kg - 0.5) <= 1e-10
        sch = builtin("schroedinger").fields[0]
        frac_sch = antiparticle_content(sch, Dispersion(SCHROEDINGER, 1.0), 64, L)
        assert abs(frac_sch - 0.0) <= 1e-10
        for f, frac in ((kg, frac_kg), (sch, frac_sch)):
            rt = real_type(f.internal)
            labels = classify_discrete(f.discrete_candidates, rt)
            assert (frac > 0) == predict_antiparticles(rt, labels)


def test_criterion_7_inner_product_invariance(acceptance):
    with acceptance(7, "inner product conserved: evolution/translation 1e-10, "
                       "internal rotations 1e-9, 50 seeded states", 10.0):
        rep = builtin("complex-kg").fields[0].internal
        h = find_invariant_metric(rep).h
        d = Dispersion(RELATIVISTIC, 1.0)
        rng = np.random.default_rng(50)
        states = []
        for _ in range(50):
            c = rng.normal(size=(64, 2)) + 1j * rng.normal(size=(64, 2))
            pos, _ = frequency_split(real_solution_from_positive(c, d, L))
            states.append(pos)
        for f, g in zip(states, states[1:]):
            base = inner_product(f, g, h)
            scale = max(1.0, abs(base))
            for tau in (0.1, 0.7, 3.0):
                moved = inner_product(f.evolve(tau), g.evolve(tau), h)
                assert abs(moved - base) <= 1e-10 * scale
            shifted = inner_product(f.translate(1), g.translate(1), h)
            assert abs(shifted - base) <= 1e-10 * scale
            for t in (0.3, 1.0):
                r = expm(rep.generators[0], t).astype(complex)
                rf = f.__class__(**{**f.__dict__, "coeffs": f.coeffs @ r.T})
                rg = g.__class__(**{**g.__dict__, "coeffs": g.coeffs @ r.T})
                rotated = inner_product(rf, rg, h)
                assert abs(rotated - base) <= 1e-9 * scale


def test_criterion_8_cli_determinism(acceptance, capsys):
    with acceptance(8, "two seeded runs of the standard-model classification "
                       "emit byte-identical JSON", 30.0):
        argv = ["classify", "--builtin", "standard-model", "--format", "json",
                "--seed", "42"]
        assert cli_main(list(argv)) == 0
        first = capsys.readouterr().out
        assert cli_main(list(argv)) == 0
        second = capsys.readouterr().out
        assert first.encode() == second.encode()
        json.loads(first)  # well-formed
