"""Spontaneous symmetry breaking for the quartic potential family.

V(phi) = alpha <phi,phi> + beta <phi,phi>^2 with beta > 0 and <,> an invariant
inner product. This is the only potential family supported: with a positive
quadratic term the vacuum sits at the origin and every mode has mass squared
2*alpha; with a negative one the vacua form the orbit <phi,phi> = -alpha/2beta
and the Hessian shows one massive radial mode and dim(orbit) Goldstone zeros.

The stabilizer of a vacuum vector is the subalgebra of generators that
annihilate it; its action on other fields (for gauge bosons, the adjoint
action) decomposes their internal spaces into the residual invariant blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateQuartic, InvalidInput, NotAMinimum
from .kernel import DEFAULT_TOL, TolerancePolicy, nullspace, orthonormal_columns
from .reps import (HONESTLY_REAL, InvariantMetric, RealType, RepData,
                   find_invariant_metric, find_invariant_subspace, real_type)


@dataclass
class QuarticPotential:
    alpha: float
    beta: float
    dim: int
    metric: InvariantMetric | None = None

    def __post_init__(self):
        if self.beta <= 0:
            raise InvalidInput("beta must be positive")
        if self.dim <= 0:
            raise InvalidInput("dim must be positive")
        if self.metric is None:
            self.metric = InvariantMetric(np.eye(self.dim))

    def norm2(self, phi: np.ndarray) -> float:
        return float(phi @ self.metric.h @ phi)

    def value(self, phi: np.ndarray) -> float:
        u = self.norm2(phi)
        return self.alpha * u + self.beta * u * u

    def gradient(self, phi: np.ndarray) -> np.ndarray:
        hphi = self.metric.h @ phi
        return 2.0 * self.alpha * hphi + 4.0 * self.beta * self.norm2(phi) * hphi

    def hessian(self, phi: np.ndarray) -> np.ndarray:
        h = self.metric.h
        hphi = h @ phi
        u = self.norm2(phi)
        return (2.0 * self.alpha + 4.0 * self.beta * u) * h + 8.0 * self.beta * np.outer(hphi, hphi)


@dataclass
class VacuumSolution:
    phi0: np.ndarray
    orbit_radius: float
    degenerate: bool


@dataclass
class MassSpectrum:
    masses_squared: np.ndarray
    massless_count: int


@dataclass
class StabilizerAlgebra:
    """Subalgebra of the generator span annihilating the vacuum vector.

    coefficients[k] holds the expansion of basis[k] over the input generators,
    which downstream code uses to form adjoint actions on gauge algebras.
    """

    basis: list
    coefficients: np.ndarray


def minimize(p: QuarticPotential, strict: bool = False,
             tol: TolerancePolicy = DEFAULT_TOL) -> VacuumSolution:
    """Locate the vacuum of the quartic potential.

    alpha >= 0 puts the minimum at the origin. alpha < 0 gives the orbit
    <phi,phi> = -alpha/2beta; the representative along the first coordinate
    axis is returned and the continuous degeneracy is flagged (for dim >= 2).
    strict=True refuses alpha = 0, whose vacuum manifold is flat at the origin.
    """
    if p.alpha == 0.0 and strict:
        raise DegenerateQuartic("alpha = 0: flat directions at the origin")
    n = p.dim
    if p.alpha >= 0.0:
        return VacuumSolution(phi0=np.zeros(n), orbit_radius=0.0, degenerate=False)
    radius = float(np.sqrt(-p.alpha / (2.0 * p.beta)))
    phi0 = np.zeros(n)
    phi0[0] = radius / np.sqrt(p.metric.h[0, 0])
    grad = p.gradient(phi0)
    if np.linalg.norm(grad) > tol.eps_rel * max(1.0, abs(p.alpha)):
        raise InvalidInput("vacuum representative failed the gradient check")
    return VacuumSolution(phi0=phi0, orbit_radius=radius, degenerate=n >= 2)


def _finite_difference_hessian(p: QuarticPotential, phi0: np.ndarray) -> np.ndarray:
    n = p.dim
    step = 1e-4 * max(1.0, float(np.linalg.norm(phi0)))
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            pp = phi0.copy(); pp[i] += step; pp[j] += step
            pm = phi0.copy(); pm[i] += step; pm[j] -= step
            mp = phi0.copy(); mp[i] -= step; mp[j] += step
            mm = phi0.copy(); mm[i] -= step; mm[j] -= step
            out[i, j] = (p.value(pp) - p.value(pm) - p.value(mp) + p.value(mm)) / (4 * step * step)
    return out


def hessian_spectrum(p: QuarticPotential, v: VacuumSolution,
                     tol: TolerancePolicy = DEFAULT_TOL) -> MassSpectrum:
    """Mass-squared spectrum at the vacuum, in the (1/2) m^2 phi^2 normalization.

    The analytic Hessian is cross-checked against central finite differences;
    disagreement beyond 1e-6 relative is treated as an internal error.
    Raises NotAMinimum when a negative eigenvalue shows the point is a saddle.
    """
    analytic = p.hessian(v.phi0)
    fd = _finite_difference_hessian(p, v.phi0)
    scale = max(1.0, float(np.linalg.norm(analytic)))
    if np.linalg.norm(analytic - fd) > 1e-6 * scale:
        raise InvalidInput("analytic and finite-difference Hessians disagree")
    masses = np.linalg.eigvalsh(analytic)
    cutoff = tol.rank_cutoff(analytic)
    if masses[0] < -cutoff:
        raise NotAMinimum(f"Hessian has negative eigenvalue {masses[0]:.6e}")
    massless = int(np.sum(np.abs(masses) <= cutoff))
    return MassSpectrum(masses_squared=masses, massless_count=massless)


def stabilizer(rep: RepData, phi0, tol: TolerancePolicy = DEFAULT_TOL) -> StabilizerAlgebra:
    """Basis of {X in span(generators) : X phi0 = 0}."""
    phi0 = np.asarray(phi0, dtype=float)
    if phi0.shape != (rep.dim,):
        raise InvalidInput("phi0 does not live in the representation space")
    if not rep.generators:
        return StabilizerAlgebra(basis=[], coefficients=np.zeros((0, 0)))
    columns = np.stack([g @ phi0 for g in rep.generators], axis=1)
    coeffs = nullspace(columns, tol)
    basis = [sum(c * g for c, g in zip(coeffs[:, k], rep.generators))
             for k in range(coeffs.shape[1])]
    return StabilizerAlgebra(basis=basis, coefficients=coeffs)


def orbit_dimension(rep: RepData, phi0, tol: TolerancePolicy = DEFAULT_TOL) -> int:
    """Dimension of the symmetry orbit through phi0 (= Goldstone count)."""
    phi0 = np.asarray(phi0, dtype=float)
    if not rep.generators:
        return 0
    columns = np.stack([g @ phi0 for g in rep.generators], axis=1)
    s = np.linalg.svd(columns, compute_uv=False)
    cutoff = tol.eps_rank * (s[0] if s.size else 0.0)
    return int(np.sum(s > cutoff))


@dataclass
class ResidualBlock:
    basis: np.ndarray
    generators: list
    dim: int
    trivial: bool
    rtype: RealType


def _coordinate_aligned_split(basis: np.ndarray, tol: TolerancePolicy) -> list:
    """Split a trivially-acted-on subspace into 1-dim blocks near coordinate axes."""
    m, d = basis.shape
    proj = basis @ basis.T
    picked = []
    candidates = sorted(range(m), key=lambda i: (-np.linalg.norm(proj[:, i]), i))
    for i in candidates:
        v = proj[:, i].copy()
        for u in picked:
            v -= (u @ v) * u
        norm = np.linalg.norm(v)
        if norm > 1e-8:
            picked.append(v / norm)
        if len(picked) == d:
            break
    return [vec.reshape(m, 1) for vec in picked]


def _split_recursive(gens, basis, tol, seed):
    sub = RepData(dim=basis.shape[1],
                  generators=[basis.T @ g @ basis for g in gens])
    found = find_invariant_subspace(sub, tol, seed=seed)
    if found is None:
        return [basis]
    inside = basis @ found
    complement = orthonormal_columns(
        (np.eye(basis.shape[0]) - inside @ inside.T) @ basis, tol)
    return (_split_recursive(gens, inside, tol, seed + 1)
            + _split_recursive(gens, complement, tol, seed + 1))


def residual_decompose(stab_action, tol: TolerancePolicy = DEFAULT_TOL) -> list:
    """Decompose a space into blocks irreducible under the residual action.

    `stab_action` is the list of matrices by which the stabilizer acts on the
    target space (for gauge bosons, the adjoint action on the algebra). Work
    happens in coordinates where the invariant metric is the identity, so the
    returned blocks are pairwise orthogonal with respect to that metric and
    sum to the full space. Blocks with (numerically) zero restricted action
    are split along coordinate-aligned directions and tagged trivial.
    """
    gens = [np.asarray(g, dtype=float) for g in stab_action]
    if not gens:
        raise InvalidInput("need at least one action matrix")
    m = gens[0].shape[0]
    action_rep = RepData(dim=m, generators=gens)
    metric = find_invariant_metric(action_rep, tol)
    w, q = np.linalg.eigh(metric.h)
    root = q @ np.diag(np.sqrt(w)) @ q.T
    root_inv = q @ np.diag(1.0 / np.sqrt(w)) @ q.T
    tilde = [root @ g @ root_inv for g in gens]
    pieces = _split_recursive(tilde, np.eye(m), tol, seed=101)
    blocks = []
    for basis_t in pieces:
        restricted = [basis_t.T @ g @ basis_t for g in tilde]
        scale = max([1.0] + [np.linalg.norm(g) for g in tilde])
        trivial = all(np.linalg.norm(r) <= tol.eps_rel * scale for r in restricted)
        if trivial and basis_t.shape[1] > 1:
            split = _coordinate_aligned_split(basis_t, tol)
        else:
            split = [basis_t]
        for b in split:
            basis_orig = root_inv @ b
            # renormalize columns against roundoff; they stay h-orthonormal
            for k in range(basis_orig.shape[1]):
                basis_orig[:, k] /= np.sqrt(basis_orig[:, k] @ metric.h @ basis_orig[:, k])
            restr = [b.T @ g @ b for g in tilde]
            is_trivial = all(np.linalg.norm(r) <= tol.eps_rel * scale for r in restr)
            block_rep = RepData(dim=b.shape[1], generators=restr)
            rt = (RealType(tag=HONESTLY_REAL, commutant_dim=1) if is_trivial and b.shape[1] == 1
                  else real_type(block_rep, tol))
            blocks.append(ResidualBlock(basis=basis_orig, generators=restr,
                                        dim=b.shape[1], trivial=is_trivial, rtype=rt))
    blocks.sort(key=lambda blk: (-blk.dim, int(np.argmax(np.abs(blk.basis[:, 0])))))
    return blocks
