"""Normal modes of 1+1D linear fields on a periodic lattice.

A solution is stored per spatial wavenumber k_n = 2*pi*n/L as the pair of
complex internal vectors (C_n, D_n): the e^{-i w t} and e^{+i w t} content at
that wavenumber. A real classical solution obeys D_n = conj(C_{-n}); the
complexified solution space has independent C and D. Evolution is exact
per-mode phase rotation, so invariance checks carry no integrator error.

Zero-frequency modes (the k = 0 mode of a massless relativistic field or of
any first-order dispersion) are excluded from the mode sum: the 1/w measure
of the one-particle inner product is singular there. Exclusions are recorded
on the solution and surfaced in reports.

The lattice checks cover spatial translations and exact time evolution;
boosts are not represented on the lattice and are left untested.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DimensionMismatch, InvalidInput, ZeroModeSingular
from .kernel import DEFAULT_TOL, TolerancePolicy, matrix_rank
from .reps import SECRETLY_COMPLEX, RepData, is_real_irreducible, real_type
from .cxify import decompose

RELATIVISTIC = "relativistic"
SCHROEDINGER = "schroedinger"


@dataclass(frozen=True)
class Dispersion:
    """w(k) = sqrt(k^2 + m^2) (relativistic) or k^2 / 2m (schroedinger)."""

    kind: str
    mass: float = 1.0

    def __post_init__(self):
        if self.kind not in (RELATIVISTIC, SCHROEDINGER):
            raise InvalidInput(f"unknown dispersion kind {self.kind!r}")
        if self.kind == SCHROEDINGER and self.mass <= 0:
            raise InvalidInput("schroedinger dispersion needs mass > 0")
        if self.mass < 0:
            raise InvalidInput("mass must be non-negative")

    def omega(self, k: np.ndarray) -> np.ndarray:
        k = np.asarray(k, dtype=float)
        if self.kind == RELATIVISTIC:
            return np.sqrt(k * k + self.mass * self.mass)
        return k * k / (2.0 * self.mass)

    @property
    def first_order(self) -> bool:
        return self.kind == SCHROEDINGER


def wavenumbers(sites: int, length: float) -> np.ndarray:
    return 2.0 * np.pi * np.fft.fftfreq(sites, d=length / sites)


def _check_lattice(sites: int, length: float):
    if sites <= 0 or (sites & (sites - 1)) != 0:
        raise InvalidInput(f"sites must be a power of two, got {sites}")
    if length <= 0:
        raise InvalidInput("length must be positive")


@dataclass
class LatticeSolution:
    """Mode coefficients of one complexified lattice solution."""

    sites: int
    length: float
    internal_dim: int
    dispersion: Dispersion
    C: np.ndarray  # (sites, internal_dim) complex
    D: np.ndarray
    k: np.ndarray
    omega: np.ndarray
    mask: np.ndarray  # included modes; excluded ones carry zero coefficients

    def cauchy_data(self):
        """(phi, phidot) samples at t = 0 synthesized from the coefficients."""
        phi = np.fft.ifft(self.C + self.D, axis=0) * self.sites
        phidot = np.fft.ifft(-1j * self.omega[:, None] * (self.C - self.D), axis=0) * self.sites
        return phi, phidot

    def evolve(self, t: float) -> "LatticeSolution":
        phase = np.exp(-1j * self.omega * t)[:, None]
        return replace(self, C=self.C * phase, D=self.D * np.conj(phase))

    def is_real(self, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
        paired = np.conj(_flip_modes(self.C))
        scale = max(1.0, float(np.linalg.norm(self.C)))
        return np.linalg.norm(self.D - paired) <= tol.eps_rel * scale


@dataclass
class OneParticleState:
    """Single-frequency-sign coefficient data; sign +1 is positive frequency."""

    sites: int
    length: float
    internal_dim: int
    sign: int
    coeffs: np.ndarray
    k: np.ndarray
    omega: np.ndarray
    mask: np.ndarray

    def evolve(self, t: float) -> "OneParticleState":
        phase = np.exp(-1j * self.sign * self.omega * t)[:, None]
        return replace(self, coeffs=self.coeffs * phase)

    def translate(self, n_sites: int) -> "OneParticleState":
        shift = np.exp(1j * self.k * n_sites * self.length / self.sites)[:, None]
        return replace(self, coeffs=self.coeffs * shift)

    def norm(self, h: np.ndarray | None = None) -> float:
        return float(np.sqrt(max(inner_product(self, self, h).real, 0.0)))


def _flip_modes(a: np.ndarray) -> np.ndarray:
    """Map index n to -n mod M along axis 0."""
    return np.roll(a[::-1], 1, axis=0)


def from_cauchy_data(phi, phidot, d: Dispersion, length: float,
                     J: np.ndarray | None = None,
                     tol: TolerancePolicy = DEFAULT_TOL) -> LatticeSolution:
    """Invert the two-term mode expansion from t = 0 samples.

    phi and phidot are real arrays of shape (sites,) or (sites, internal_dim).
    Relativistic dispersion inverts the expansion per mode; a first-order
    dispersion instead projects onto the +/-i eigenspaces of the internal
    complex structure J (required then) and checks phidot for consistency.
    """
    phi = np.asarray(phi, dtype=float)
    phidot = np.asarray(phidot, dtype=float)
    if phi.ndim == 1:
        phi = phi[:, None]
        phidot = phidot[:, None]
    if phi.shape != phidot.shape:
        raise InvalidInput("phi and phidot shapes differ")
    sites, n = phi.shape
    _check_lattice(sites, length)
    k = wavenumbers(sites, length)
    omega = d.omega(k)
    mask = omega > 1e-12 * max(1.0, float(np.max(omega)))
    cap = np.fft.fft(phi, axis=0) / sites
    capdot = np.fft.fft(phidot, axis=0) / sites
    scale = max(1.0, float(np.linalg.norm(phi)), float(np.linalg.norm(phidot)))
    excluded = ~mask
    if np.any(excluded):
        bad = (np.linalg.norm(cap[excluded]) > tol.eps_rel * scale
               or np.linalg.norm(capdot[excluded]) > tol.eps_rel * scale)
        if bad:
            raise ZeroModeSingular(
                "Cauchy data has content in excluded zero-frequency modes")
    C = np.zeros((sites, n), dtype=complex)
    D = np.zeros((sites, n), dtype=complex)
    if not d.first_order:
        w = omega[mask][:, None]
        C[mask] = (cap[mask] + 1j * capdot[mask] / w) / 2.0
        D[mask] = (cap[mask] - 1j * capdot[mask] / w) / 2.0
    else:
        if J is None:
            raise InvalidInput("first-order dispersion needs the internal complex structure J")
        jc = np.asarray(J, dtype=complex)
        p_plus = (np.eye(n) - 1j * jc) / 2.0
        p_minus = (np.eye(n) + 1j * jc) / 2.0
        C[mask] = cap[mask] @ p_plus.T
        D[mask] = cap[mask] @ p_minus.T
        expected = -1j * omega[mask][:, None] * (C[mask] - D[mask])
        if np.linalg.norm(capdot[mask] - expected) > 1e-8 * scale:
            raise InvalidInput("phidot is inconsistent with the first-order dynamics")
    return LatticeSolution(sites=sites, length=length, internal_dim=n, dispersion=d,
                           C=C, D=D, k=k, omega=omega, mask=mask)


def solution_from_coeffs(C, D, d: Dispersion, length: float) -> LatticeSolution:
    """Wrap coefficient arrays directly; excluded modes must carry zeros."""
    C = np.asarray(C, dtype=complex)
    D = np.asarray(D, dtype=complex)
    sites, n = C.shape
    _check_lattice(sites, length)
    k = wavenumbers(sites, length)
    omega = d.omega(k)
    mask = omega > 1e-12 * max(1.0, float(np.max(omega)))
    sol = LatticeSolution(sites=sites, length=length, internal_dim=n, dispersion=d,
                          C=C.copy(), D=D.copy(), k=k, omega=omega, mask=mask)
    sol.C[~mask] = 0.0
    sol.D[~mask] = 0.0
    return sol


def real_solution_from_positive(C, d: Dispersion, length: float) -> LatticeSolution:
    """The unique real solution with the given positive-frequency content."""
    C = np.asarray(C, dtype=complex)
    return solution_from_coeffs(C, np.conj(_flip_modes(C)), d, length)


def frequency_split(s: LatticeSolution):
    """Split into positive- and negative-frequency parts.

    The split is linear and idempotent, and the two parts reconstruct the
    input exactly: they are just the C and D coefficient blocks.
    """
    common = dict(sites=s.sites, length=s.length, internal_dim=s.internal_dim,
                  k=s.k, omega=s.omega, mask=s.mask)
    positive = OneParticleState(sign=+1, coeffs=s.C.copy(), **common)
    negative = OneParticleState(sign=-1, coeffs=s.D.copy(), **common)
    return positive, negative


def inner_product(f: OneParticleState, g: OneParticleState,
                  h: np.ndarray | None = None) -> complex:
    """(L/M) * sum_k (1/w_k) h_ab conj(f_a(k)) g_b(k).

    Sesquilinear (conjugate in the first slot) and positive definite on
    nonzero states. Both arguments must share lattice and internal data.
    """
    if (f.sites, f.internal_dim) != (g.sites, g.internal_dim) or f.length != g.length:
        raise DimensionMismatch("states live on different lattices or internal spaces")
    if not np.allclose(f.omega, g.omega):
        raise DimensionMismatch("states carry different dispersions")
    if h is None:
        h = np.eye(f.internal_dim)
    h = np.asarray(h, dtype=complex)
    fc = f.coeffs[f.mask]
    gc = g.coeffs[f.mask]
    w = f.omega[f.mask][:, None]
    weighted = np.conj(fc) @ h
    total = np.sum(weighted * gc / w)
    return complex(total * (f.length / f.sites))


def antiparticle_content(field_spec, d: Dispersion, sites: int,
                         length: float = 2.0 * np.pi,
                         tol: TolerancePolicy = DEFAULT_TOL):
    """Fraction of the positive-frequency space lying in the antiparticle sector.

    Accepts a catalog FieldSpec or a bare RepData. Builds the positive
    frequency subspace from a spanning set of real classical solutions,
    intersects it with the block of modes whose internal vectors lie in the
    -i eigenspace of J, and returns the dimension fraction. Returns None when
    the internal action is not secretly complex.
    """
    rep = getattr(field_spec, "internal", field_spec)
    if not isinstance(rep, RepData):
        raise InvalidInput("expected a FieldSpec or RepData")
    if not is_real_irreducible(rep, tol):
        return None
    rt = real_type(rep, tol)
    if rt.tag != SECRETLY_COMPLEX:
        return None
    sectors = decompose(rep, rt.J, tol)
    n = rep.dim
    _check_lattice(sites, length)
    k = wavenumbers(sites, length)
    omega = d.omega(k)
    mask = omega > 1e-12 * max(1.0, float(np.max(omega)))
    included = np.flatnonzero(mask)
    if d.first_order:
        directions = [sectors.basis_plus[:, j] for j in range(sectors.sector_dim)]
    else:
        directions = [np.eye(n, dtype=complex)[:, a] for a in range(n)]
    span = []
    for idx in included:
        for v in directions:
            C = np.zeros((sites, n), dtype=complex)
            C[idx] = v
            real_sol = real_solution_from_positive(C, d, length)
            phi, phidot = real_sol.cauchy_data()
            if np.linalg.norm(phi.imag) > 1e-9 or np.linalg.norm(phidot.imag) > 1e-9:
                raise InvalidInput("spanning solution failed to be real")
            sol = from_cauchy_data(phi.real, phidot.real, d, length,
                                   J=rt.J.J if d.first_order else None, tol=tol)
            positive, _ = frequency_split(sol)
            span.append(positive.coeffs[mask].ravel())
    plus_matrix = np.stack(span, axis=1)
    dim_positive = matrix_rank(plus_matrix, tol)
    anti_cols = []
    m_inc = len(included)
    for row, _ in enumerate(included):
        e = np.zeros((m_inc, 1))
        e[row] = 1.0
        anti_cols.append(np.kron(e, sectors.basis_minus))
    anti_matrix = np.hstack(anti_cols)
    dim_anti = anti_matrix.shape[1]
    dim_union = matrix_rank(np.hstack([plus_matrix, anti_matrix]), tol)
    overlap = dim_positive + dim_anti - dim_union
    return overlap / dim_positive


CSV_HEADER = "k_index,k_value,omega,component,re_c,im_c,re_d,im_d"


def mode_csv(s: LatticeSolution) -> str:
    """Rows ordered by signed wavenumber index, then internal component."""
    lines = [CSV_HEADER]
    order = sorted(range(s.sites), key=lambda i: i - s.sites * (i >= s.sites // 2))
    for i in order:
        signed = i - s.sites * (i >= s.sites // 2)
        for a in range(s.internal_dim):
            c, dcoef = s.C[i, a], s.D[i, a]
            values = [float(s.k[i]), float(s.omega[i])]
            parts = [str(signed)] + [repr(v) for v in values] + [str(a)]
            parts += [repr(float(v)) for v in (c.real, c.imag, dcoef.real, dcoef.imag)]
            lines.append(",".join(parts))
    return "\n".join(lines) + "\n"
