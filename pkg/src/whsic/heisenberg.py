"""Weyl-Heisenberg operators on C^d and the fixed Clifford matrices.

All matrices are dense ``complex128`` arrays indexed by Z_d in the natural
order ``0, 1, ..., d-1``.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .validation import check_dimension

__all__ = [
    "RootConstants",
    "roots",
    "root_of_unity",
    "shift_matrix",
    "omega_matrix",
    "displacement",
    "fourier_matrix",
    "negation_matrix",
    "r_matrix",
    "zauner_matrix",
    "matrix_power",
    "is_unitary",
]


def root_of_unity(n, power=1):
    """Return ``exp(2*pi*i*power/n)`` computed from the reduced angle.

    Powers are reduced mod ``n`` before exponentiation, so ``root_of_unity(n, n)``
    is exactly 1 and no drift accumulates from repeated multiplication.
    """
    power = np.mod(power, n)
    return np.exp(2j * np.pi * power / n)


@dataclass(frozen=True)
class RootConstants:
    """Roots of unity attached to dimension ``d``.

    ``omega`` is the primitive d-th root, ``mu`` the primitive 2d-th root
    (so ``mu**2 == omega``) and ``zeta`` the primitive 24th root used in the
    Zauner matrix.
    """

    d: int

    def __post_init__(self):
        check_dimension(self.d)

    @cached_property
    def omega(self):
        return root_of_unity(self.d)

    @cached_property
    def mu(self):
        return root_of_unity(2 * self.d)

    @cached_property
    def zeta(self):
        return root_of_unity(24)

    def omega_pow(self, n):
        return root_of_unity(self.d, n)

    def mu_pow(self, n):
        return root_of_unity(2 * self.d, n)

    def zeta_pow(self, n):
        return root_of_unity(24, n)


def roots(d):
    return RootConstants(d)


def shift_matrix(d):
    """Cyclic shift ``S`` with ``S[j, k] = 1`` iff ``j == k + 1 (mod d)``."""
    d = check_dimension(d)
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def omega_matrix(d):
    """Diagonal modulation matrix ``diag(omega**j)``."""
    d = check_dimension(d)
    return np.diag(root_of_unity(d, np.arange(d)))


def displacement(d, j, k):
    """Return the displacement operator ``S**j @ Omega**k``.

    Indices are reduced mod ``d``; negative values are accepted.

    Examples
    --------
    >>> displacement(2, 1, 1).real
    array([[ 0., -1.],
           [ 1.,  0.]])
    """
    d = check_dimension(d)
    j, k = j % d, k % d
    rows = (np.arange(d) + j) % d
    out = np.zeros((d, d), dtype=complex)
    out[rows, np.arange(d)] = root_of_unity(d, k * np.arange(d))
    return out


def fourier_matrix(d):
    """Unitary DFT matrix ``F[j, k] = omega**(j*k) / sqrt(d)``."""
    d = check_dimension(d)
    idx = np.arange(d)
    return root_of_unity(d, np.outer(idx, idx)) / np.sqrt(d)


def negation_matrix(d):
    """Permutation ``P_{-1}`` sending ``e_j`` to ``e_{-j}``; equals ``F @ F``."""
    d = check_dimension(d)
    out = np.zeros((d, d), dtype=complex)
    out[(-np.arange(d)) % d, np.arange(d)] = 1.0
    return out


def r_matrix(d):
    """Diagonal ``R[j, j] = mu**(j*(j+d))``, the phase part of the Zauner matrix."""
    d = check_dimension(d)
    j = np.arange(d)
    return np.diag(root_of_unity(2 * d, j * (j + d)))


def zauner_matrix(d):
    """Zauner's order-3 Clifford matrix ``Z = zeta**(d-1) R F``."""
    d = check_dimension(d)
    return root_of_unity(24, d - 1) * (r_matrix(d) @ fourier_matrix(d))


def matrix_power(a, n):
    """Integer power of a square matrix as ``complex128``; negative ``n`` inverts."""
    return np.linalg.matrix_power(np.asarray(a, dtype=complex), int(n))


def is_unitary(a, tol=1e-12):
    a = np.asarray(a)
    gap = np.linalg.norm(a.conj().T @ a - np.eye(a.shape[0]))
    return bool(gap <= tol)
