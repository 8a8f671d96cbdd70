"""Complexification of real spaces and the conjugate sector decomposition.

A real representation is complexified by reinterpreting its generators over
complex scalars; the natural conjugation map is then entrywise conjugation in
the canonical basis (the ordered-pair picture (v, w) with J(v, w) = (w, -v)
is isomorphic and is not carried as a second code path). When the original
action is secretly complex with structure J, the complexified space splits
into the +i and -i eigenspaces of J; the +i eigenspace is the particle
sector by convention, recorded in every report.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput, NotSecretlyComplex
from .kernel import DEFAULT_TOL, TolerancePolicy, nullspace
from .reps import ComplexStructureJ, RepData, complex_commutant_dim


def realify(m) -> np.ndarray:
    """Real 2n x 2n matrix of a complex-linear map on C^n.

    Convention: z maps to (Re z, Im z) stacked, so
    M = A + iB becomes [[A, -B], [B, A]].
    """
    a = np.asarray(m, dtype=complex)
    return np.block([[a.real, -a.imag], [a.imag, a.real]])


def realify_vector(v) -> np.ndarray:
    z = np.asarray(v, dtype=complex)
    return np.concatenate([z.real, z.imag])


def complex_structure_matrix(n_complex: int) -> np.ndarray:
    """Realification of multiplication by i on C^n."""
    return realify(1j * np.eye(n_complex))


@dataclass
class ComplexifiedRep:
    """Generators acting on the complexified space, plus the conjugation map."""

    dim_c: int
    operators: list

    def conjugation(self, v: np.ndarray) -> np.ndarray:
        return np.conj(v)


@dataclass
class SectorDecomposition:
    """The particle/antiparticle split of a complexified secretly-complex action.

    range(P_plus) is the +i eigenspace of the complexified J: the particle
    sector. basis_minus is the entrywise conjugate of basis_plus, which makes
    the restricted generator lists exact conjugates of each other.
    """

    P_plus: np.ndarray
    P_minus: np.ndarray
    rep_plus: list
    rep_minus: list
    sector_dim: int
    basis_plus: np.ndarray
    basis_minus: np.ndarray
    J: ComplexStructureJ


def complexify(rep: RepData) -> ComplexifiedRep:
    ops = [g.astype(complex) for g in rep.generators]
    return ComplexifiedRep(dim_c=rep.dim, operators=ops)


def check_irreducible_complex(operators, tol: TolerancePolicy = DEFAULT_TOL,
                              dim: int | None = None) -> bool:
    """Schur criterion: irreducible iff the complex commutant is scalars only.

    Accepts a list of square complex matrices or a ComplexifiedRep; a bare
    empty operator list needs `dim` (the commutant is then everything).
    """
    if isinstance(operators, ComplexifiedRep):
        dim = operators.dim_c
        operators = operators.operators
    if not operators:
        if dim is None:
            raise InvalidInput("empty operator list needs an explicit dimension")
        return dim == 1
    return complex_commutant_dim(operators, tol) == 1


def _canonical_phase(basis: np.ndarray) -> np.ndarray:
    """Fix each column's overall phase so the largest-modulus entry is real positive."""
    out = basis.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        k = int(np.argmax(np.abs(col)))
        phase = col[k] / abs(col[k])
        out[:, j] = col / phase
    return out


def decompose(rep: RepData, j: ComplexStructureJ,
              tol: TolerancePolicy = DEFAULT_TOL) -> SectorDecomposition:
    """Split the complexification into conjugate particle/antiparticle sectors.

    P_plus/P_minus come from the exact algebraic projectors (I -/+ i J)/2,
    so P_plus + P_minus = I holds exactly. Sector bases are orthonormal
    eigenbases of J with basis_minus = conj(basis_plus).
    """
    n = rep.dim
    if j.J.shape != (n, n):
        raise InvalidInput("J size does not match the representation")
    if not j.check(tol):
        raise NotSecretlyComplex("J^2 != -I within tolerance")
    for g in rep.generators:
        if np.linalg.norm(j.J @ g - g @ j.J) > tol.eps_rel * max(1.0, np.linalg.norm(g)):
            raise NotSecretlyComplex("J does not commute with every generator")
    jc = j.J.astype(complex)
    eye = np.eye(n, dtype=complex)
    p_plus = (eye - 1j * jc) / 2.0
    p_minus = (eye + 1j * jc) / 2.0
    basis_plus = _canonical_phase(nullspace(jc - 1j * eye, tol))
    if basis_plus.shape[1] * 2 != n:
        raise NotSecretlyComplex(
            f"+i eigenspace of J has dimension {basis_plus.shape[1]}, expected {n // 2}")
    basis_minus = np.conj(basis_plus)
    rep_plus = [basis_plus.conj().T @ g.astype(complex) @ basis_plus for g in rep.generators]
    rep_minus = [basis_minus.conj().T @ g.astype(complex) @ basis_minus for g in rep.generators]
    return SectorDecomposition(
        P_plus=p_plus, P_minus=p_minus,
        rep_plus=rep_plus, rep_minus=rep_minus,
        sector_dim=n // 2, basis_plus=basis_plus, basis_minus=basis_minus, J=j)


def verify_conjugate_pair(d: SectorDecomposition, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """Check that conjugation intertwines the two sector actions.

    In sector coordinates the conjugation map from the plus to the minus
    sector is w -> T conj(w) with T = basis_minus^H conj(basis_plus); the
    intertwining condition is rep_minus T = T conj(rep_plus), generator by
    generator.
    """
    t = d.basis_minus.conj().T @ np.conj(d.basis_plus)
    for gp, gm in zip(d.rep_plus, d.rep_minus):
        scale = max(1.0, np.linalg.norm(gp))
        if np.linalg.norm(gm @ t - t @ np.conj(gp)) > tol.eps_rel * scale:
            return False
    return True


def sector_action_phase(d: SectorDecomposition, group_element: np.ndarray,
                        sector: str = "plus") -> np.ndarray:
    """Matrix of a group element restricted to one sector (coordinates of that sector)."""
    basis = d.basis_plus if sector == "plus" else d.basis_minus
    return basis.conj().T @ group_element.astype(complex) @ basis


def real_form_intertwiner(rep: RepData, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Invertible S with S X = X' S between the original generators and the
    restriction of their complexification to the conjugation-fixed subspace.

    The fixed subspace of entrywise conjugation is R^n in the canonical basis,
    so the restricted generators coincide with the originals and the equation
    system is the real commutant; a generic element with nonzero determinant
    witnesses the equivalence.
    """
    n = rep.dim
    if not rep.generators:
        return np.eye(n)
    eye = np.eye(n)
    rows = np.vstack([np.kron(g, eye) - np.kron(eye, g.T) for g in rep.generators])
    sols = nullspace(rows, tol)
    best, best_det = None, 0.0
    rng = np.random.default_rng(7)
    for k in range(sols.shape[1]):
        s = sols[:, k].reshape(n, n)
        det = abs(np.linalg.det(s))
        if det > best_det:
            best, best_det = s, det
    for _ in range(4):
        coef = rng.normal(size=sols.shape[1])
        s = (sols @ coef).reshape(n, n)
        det = abs(np.linalg.det(s))
        if det > best_det:
            best, best_det = s, det
    if best is None or best_det <= tol.eps_rank:
        raise InvalidInput("no invertible intertwiner found in the equivalence system")
    return best
