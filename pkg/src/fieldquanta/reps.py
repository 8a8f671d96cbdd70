"""Representation analysis on real internal spaces.

Given a finite list of Lie-algebra generators acting on R^n, this module
computes commutants, invariant inner products, real-irreducibility, and the
central dichotomy: whether the action is honestly real (no commuting complex
structure exists) or secretly complex (one does, and the module extracts it).

Everything works at the algebra level; only the connected component of the
symmetry group matters, so a generator basis is the whole input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput, IrreducibilityViolated, NoPositiveSolution
from .kernel import DEFAULT_TOL, TolerancePolicy, expm, nullspace, orthonormal_columns

HONESTLY_REAL = "HonestlyReal"
SECRETLY_COMPLEX = "SecretlyComplex"

# seeded draws for the randomized side of the irreducibility check
IRREDUCIBILITY_SAMPLES = 8
IRREDUCIBILITY_SEED = 20240901


@dataclass
class RepData:
    """A real representation: generators of a Lie algebra acting on R^dim.

    charge, when set, records the multiplier applied to u(1) generators; it is
    informational here (the generators are stored already scaled).
    """

    dim: int
    generators: list
    group_label: str = ""
    charge: float | None = None

    def __post_init__(self):
        self.generators = [np.asarray(g, dtype=float) for g in self.generators]
        if self.dim <= 0:
            raise InvalidInput("dim must be a positive integer")
        for g in self.generators:
            if g.shape != (self.dim, self.dim):
                raise InvalidInput(
                    f"generator shape {g.shape} does not match dim {self.dim}")
            if not np.all(np.isfinite(g)):
                raise InvalidInput("generator has non-finite entries")

    def closure_violations(self, tol: TolerancePolicy = DEFAULT_TOL) -> list:
        """Pairs (i, j) whose commutator leaves the span of the generators."""
        if not self.generators:
            return []
        span = np.stack([g.ravel() for g in self.generators], axis=1)
        bad = []
        for i, gi in enumerate(self.generators):
            for j in range(i + 1, len(self.generators)):
                gj = self.generators[j]
                comm = (gi @ gj - gj @ gi).ravel()
                coef, *_ = np.linalg.lstsq(span, comm, rcond=None)
                resid = np.linalg.norm(span @ coef - comm)
                scale = max(1.0, np.linalg.norm(gi) * np.linalg.norm(gj))
                if resid > tol.eps_rel * scale:
                    bad.append((i, j))
        return bad

    def validate(self, tol: TolerancePolicy = DEFAULT_TOL):
        bad = self.closure_violations(tol)
        if bad:
            raise InvalidInput(
                f"generator list not closed under commutator at pairs {bad}")
        return self


@dataclass
class ComplexStructureJ:
    """A real matrix J with J^2 = -I commuting with a representation."""

    J: np.ndarray

    def __post_init__(self):
        self.J = np.asarray(self.J, dtype=float)
        n = self.J.shape[0]
        if self.J.shape != (n, n):
            raise InvalidInput("J must be square")

    def check(self, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
        n = self.J.shape[0]
        return np.linalg.norm(self.J @ self.J + np.eye(n)) <= tol.eps_rel * n


@dataclass
class RealType:
    tag: str
    J: ComplexStructureJ | None = None
    quaternionic_flag: bool = False
    commutant_dim: int = 0


@dataclass
class InvariantMetric:
    """Positive-definite symmetric h with X^T h + h X = 0 for every generator."""

    h: np.ndarray

    def __post_init__(self):
        self.h = np.asarray(self.h, dtype=float)


def _sylvester_stack(generators, n, dtype=float):
    """Rows of the joint linear system [X, G_i] = 0 on vec(X), row-major vec."""
    eye = np.eye(n)
    blocks = [np.kron(g.astype(dtype), eye) - np.kron(eye, g.T.astype(dtype))
              for g in generators]
    return np.vstack(blocks)


def commutant(rep: RepData, tol: TolerancePolicy = DEFAULT_TOL) -> list:
    """Basis of {X : [X, G] = 0 for every generator G}.

    Solved as one stacked Sylvester system through the kernel nullspace; the
    returned matrices are orthonormal as vectors and span the full solution
    space. With no generators the commutant is everything.
    """
    n = rep.dim
    if not rep.generators:
        basis = []
        for i in range(n):
            for j in range(n):
                e = np.zeros((n, n))
                e[i, j] = 1.0
                basis.append(e)
        return basis
    system = _sylvester_stack(rep.generators, n)
    vecs = nullspace(system, tol)
    return [vecs[:, k].reshape(n, n) for k in range(vecs.shape[1])]


def complex_commutant_dim(operators, tol: TolerancePolicy = DEFAULT_TOL) -> int:
    """Dimension of the commutant over complex scalars (Schur criterion input)."""
    ops = [np.asarray(op, dtype=complex) for op in operators]
    if not ops:
        raise InvalidInput("need at least the dimension via one operator")
    n = ops[0].shape[0]
    nonzero = [op for op in ops if np.linalg.norm(op) > 0]
    if not nonzero:
        return n * n
    system = _sylvester_stack(nonzero, n, dtype=complex)
    return nullspace(system, tol).shape[1]


def find_invariant_metric(rep: RepData, tol: TolerancePolicy = DEFAULT_TOL) -> InvariantMetric:
    """Symmetric positive-definite h with X^T h + h X = 0 for all generators.

    The solve runs over the symmetric-matrix parameter space; among solutions
    the one closest to the identity (Frobenius) is returned, normalized to
    trace = dim. Raises NoPositiveSolution when the solution space has no
    positive-definite element, which certifies a non-compact action.
    """
    n = rep.dim
    # basis of symmetric matrices
    sym_basis = []
    for i in range(n):
        for j in range(i, n):
            e = np.zeros((n, n))
            e[i, j] = 1.0
            e[j, i] = 1.0
            sym_basis.append(e)
    sym = np.stack([b.ravel() for b in sym_basis], axis=1)
    if rep.generators:
        rows = np.vstack([
            np.stack([(g.T @ b + b @ g).ravel() for b in sym_basis], axis=1)
            for g in rep.generators])
        coeffs = nullspace(rows, tol)
        if coeffs.shape[1] == 0:
            raise NoPositiveSolution("no invariant symmetric form exists")
        solution_vecs = sym @ coeffs
    else:
        solution_vecs = sym
    # project the identity onto the solution space
    basis = orthonormal_columns(solution_vecs, tol)
    eye_vec = np.eye(n).ravel()
    h_vec = basis @ (basis.T @ eye_vec)
    h = h_vec.reshape(n, n)
    h = (h + h.T) / 2.0
    tr = np.trace(h)
    if tr <= tol.rank_cutoff(h):
        raise NoPositiveSolution("solution space contains no positive-definite element")
    h = h * (n / tr)
    w = np.linalg.eigvalsh(h)
    if w[0] <= tol.rank_cutoff(h):
        raise NoPositiveSolution(
            f"closest invariant form is not positive definite (min eigenvalue {w[0]:.3e})")
    return InvariantMetric(h)


def _conjugate_pair_subspaces(x: np.ndarray, tol: TolerancePolicy):
    """Real invariant subspaces from the eigenvalue classes of a commutant element.

    Eigenvalues are grouped into conjugate classes {lam, lam*}; each class
    contributes the real span of the real and imaginary parts of its
    eigenvectors. Every such subspace is invariant under anything commuting
    with x, in particular under the representation.
    """
    n = x.shape[0]
    w, v = np.linalg.eig(x)
    scale = max(1.0, np.max(np.abs(w)))
    groups = []
    used = np.zeros(len(w), dtype=bool)
    for i in range(len(w)):
        if used[i]:
            continue
        cls = np.abs(w - w[i]) <= 100 * tol.eps_rel * scale
        cls |= np.abs(w - w[i].conj()) <= 100 * tol.eps_rel * scale
        cls &= ~used
        used |= cls
        groups.append(cls)
    subspaces = []
    for cls in groups:
        vecs = v[:, cls]
        real_span = np.hstack([vecs.real, vecs.imag])
        basis = orthonormal_columns(real_span, tol)
        if 0 < basis.shape[1] < n:
            subspaces.append(basis)
    return subspaces


def _splitting_candidates(commutant_basis, rng):
    """Commutant elements worth probing for proper eigenvalue classes.

    The (anti)symmetric parts are only genuine commutant elements when the
    invariant metric is the identity; subspaces found through them are
    verified for invariance before being accepted.
    """
    candidates = [b for b in commutant_basis]
    for b in commutant_basis:
        candidates.append((b + b.T) / 2.0)
        candidates.append((b - b.T) / 2.0)
    for _ in range(IRREDUCIBILITY_SAMPLES):
        coef = rng.normal(size=len(commutant_basis))
        x = sum(c * b for c, b in zip(coef, commutant_basis))
        candidates.extend([x, (x + x.T) / 2.0, (x - x.T) / 2.0])
    return [c for c in candidates if np.linalg.norm(c) > 1e-14]


def subspace_is_invariant(rep: RepData, basis: np.ndarray,
                          tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True if the column span of `basis` (orthonormal) is invariant under all generators."""
    proj = basis @ basis.T
    for g in rep.generators:
        image = g @ basis
        resid = np.linalg.norm(image - proj @ image)
        if resid > tol.eps_rel * max(1.0, np.linalg.norm(g)):
            return False
    return True


def find_invariant_subspace(rep: RepData, tol: TolerancePolicy = DEFAULT_TOL,
                            comm_basis=None, seed: int = IRREDUCIBILITY_SEED):
    """A proper nonzero invariant subspace (orthonormal columns), or None.

    Probes commutant basis elements, their (anti)symmetric parts, and seeded
    random combinations, and accepts only candidates whose eigenvalue-class
    subspaces verify as invariant. For compact actions this detects every
    reduction: a proper invariant subspace always shows up as a proper
    eigenvalue class of some commutant element.
    """
    if rep.dim == 1:
        return None
    if comm_basis is None:
        comm_basis = commutant(rep, tol)
    if len(comm_basis) == 1:
        return None
    rng = np.random.default_rng(seed)
    best = None
    for x in _splitting_candidates(comm_basis, rng):
        for sub in _conjugate_pair_subspaces(x, tol):
            if not subspace_is_invariant(rep, sub, tol):
                continue
            if best is None or sub.shape[1] < best.shape[1]:
                best = sub
        if best is not None and best.shape[1] * 2 <= rep.dim:
            break
    return best


def is_real_irreducible(rep: RepData, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff no proper nonzero invariant subspace exists."""
    return find_invariant_subspace(rep, tol) is None


def find_complex_structure(rep: RepData, tol: TolerancePolicy = DEFAULT_TOL,
                           comm_basis=None) -> ComplexStructureJ | None:
    """Extract a complex structure commuting with the action, if one exists.

    For a real-irreducible action the commutant is a division algebra, so any
    non-scalar element K has traceless part K' with K'^2 = lam*I, lam < 0;
    J = K'/sqrt(-lam). Returns None iff the commutant is one-dimensional.
    The sign of J is fixed so its first nonzero entry in reading order is
    negative, which lands SO(2) on [[0,-1],[1,0]].
    """
    if comm_basis is None:
        if not is_real_irreducible(rep, tol):
            raise IrreducibilityViolated("representation is not real-irreducible")
        comm_basis = commutant(rep, tol)
    n = rep.dim
    if len(comm_basis) == 1:
        return None
    for k in comm_basis:
        kp = k - (np.trace(k) / n) * np.eye(n)
        norm = np.linalg.norm(kp)
        if norm <= tol.eps_rel * max(1.0, np.linalg.norm(k)):
            continue
        k2 = kp @ kp
        lam = np.trace(k2) / n
        if np.linalg.norm(k2 - lam * np.eye(n)) > tol.eps_rel * max(1.0, np.linalg.norm(k2)):
            continue
        if lam >= 0:
            continue
        j = kp / np.sqrt(-lam)
        flat = j.ravel()
        first = flat[np.abs(flat) > tol.eps_rel][0]
        if first > 0:
            j = -j
        return ComplexStructureJ(j)
    return None


def real_type(rep: RepData, tol: TolerancePolicy = DEFAULT_TOL) -> RealType:
    """The honestly-real / secretly-complex dichotomy, with J when it exists.

    Quaternionic commutants (dimension 4) still count as secretly complex --
    a commuting J exists -- but are flagged because that J is not unique.
    """
    if not is_real_irreducible(rep, tol):
        raise IrreducibilityViolated("real_type requires a real-irreducible representation")
    comm_basis = commutant(rep, tol)
    cdim = len(comm_basis)
    if cdim not in (1, 2, 4):
        raise InvalidInput(
            f"commutant dimension {cdim} impossible for a real-irreducible action")
    j = find_complex_structure(rep, tol, comm_basis=comm_basis)
    if j is None:
        return RealType(tag=HONESTLY_REAL, commutant_dim=cdim)
    return RealType(tag=SECRETLY_COMPLEX, J=j, quaternionic_flag=(cdim == 4),
                    commutant_dim=cdim)


def metric_invariance_residual(rep: RepData, metric: InvariantMetric, t: float) -> float:
    """max over generators of ||exp(tX)^T h exp(tX) - h||."""
    worst = 0.0
    for g in rep.generators:
        r = expm(g, t)
        worst = max(worst, float(np.linalg.norm(r.T @ metric.h @ r - metric.h)))
    return worst
