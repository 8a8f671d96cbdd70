"""Concrete generator bases for the Lie algebras the catalog ships.

All matrices are plain numpy arrays. Charged u(1) factors follow the sign
convention that fixes the particle sector to transform by exp(-i q theta):
the charge-q generator on a realified C^n is -q times the realification of
multiplication by i.
"""

from __future__ import annotations

import numpy as np

from .cxify import complex_structure_matrix, realify

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = [PAULI_X, PAULI_Y, PAULI_Z]


def so_generators(n: int) -> list:
    """Standard basis E_ij - E_ji (i < j) of so(n)."""
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            g = np.zeros((n, n))
            g[i, j] = -1.0
            g[j, i] = 1.0
            gens.append(g)
    return gens


def su2_generators() -> list:
    """Anti-Hermitian basis i*sigma_a/2 of su(2) on C^2."""
    return [0.5j * s for s in PAULI]


def gell_mann() -> list:
    """The eight Gell-Mann matrices (Hermitian basis of traceless 3x3)."""
    l1 = np.zeros((3, 3), dtype=complex); l1[0, 1] = l1[1, 0] = 1
    l2 = np.zeros((3, 3), dtype=complex); l2[0, 1] = -1j; l2[1, 0] = 1j
    l3 = np.diag([1.0, -1.0, 0.0]).astype(complex)
    l4 = np.zeros((3, 3), dtype=complex); l4[0, 2] = l4[2, 0] = 1
    l5 = np.zeros((3, 3), dtype=complex); l5[0, 2] = -1j; l5[2, 0] = 1j
    l6 = np.zeros((3, 3), dtype=complex); l6[1, 2] = l6[2, 1] = 1
    l7 = np.zeros((3, 3), dtype=complex); l7[1, 2] = -1j; l7[2, 1] = 1j
    l8 = np.diag([1.0, 1.0, -2.0]).astype(complex) / np.sqrt(3.0)
    return [l1, l2, l3, l4, l5, l6, l7, l8]


def su3_generators() -> list:
    """Anti-Hermitian basis i*lambda_a/2 of su(3) on C^3."""
    return [0.5j * l for l in gell_mann()]


def u1_charge_generator(q: float, n_complex: int) -> np.ndarray:
    """Realified generator of the charge-q phase action on C^n."""
    return -q * complex_structure_matrix(n_complex)


def realified(gens_complex) -> list:
    return [realify(g) for g in gens_complex]


def adjoint_generators(gens) -> list:
    """Matrices of ad(X_i) in the basis {X_i} of a closed generator list."""
    k = len(gens)
    span = np.stack([np.asarray(g).ravel() for g in gens], axis=1)
    out = []
    for gi in gens:
        cols = []
        for gj in gens:
            comm = (gi @ gj - gj @ gi).ravel()
            coef, *_ = np.linalg.lstsq(span, comm, rcond=None)
            cols.append(coef.real if np.iscomplexobj(coef) else coef)
        out.append(np.stack(cols, axis=1))
    return out


def block_diag(*mats) -> np.ndarray:
    mats = [np.asarray(m) for m in mats]
    n = sum(m.shape[0] for m in mats)
    out = np.zeros((n, n), dtype=np.result_type(*[m.dtype for m in mats]))
    at = 0
    for m in mats:
        d = m.shape[0]
        out[at:at + d, at:at + d] = m
        at += d
    return out


def kron_factor_generators(dims_complex, factor_index, gens_complex) -> list:
    """Generators acting on a tensor product of complex factors, realified.

    Each generator acts as `g` on factor `factor_index` and as the identity on
    the other factors.
    """
    out = []
    for g in gens_complex:
        op = np.eye(1, dtype=complex)
        for i, d in enumerate(dims_complex):
            op = np.kron(op, g if i == factor_index else np.eye(d, dtype=complex))
        out.append(realify(op))
    return out
