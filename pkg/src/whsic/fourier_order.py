"""Finite order of the projective Fourier transform on C^(Z_d x Z_d).

Tables are vectorised column-major (``c.reshape(-1, order="F")``), so block
``(j, k)`` of a ``d^2 x d^2`` representation maps column ``k`` of the input
table to column ``j`` of the output.
"""

import numpy as np

from .heisenberg import (
    fourier_matrix,
    matrix_power,
    negation_matrix,
    omega_matrix,
    r_matrix,
    root_of_unity,
    shift_matrix,
)
from .overlaps import reconstruct_L, reconstruct_T
from .validation import check_dimension, check_random_state

__all__ = [
    "vec",
    "unvec",
    "matrix_rep",
    "block",
    "t_block_closed_form",
    "order_sign",
    "verify_T_order",
    "verify_L_order",
    "l_fourth_power_residual",
    "verify_rsquaref_lemma",
    "block_identity_residuals",
]

_OPERATORS = {"T": reconstruct_T, "L": reconstruct_L}


def vec(c):
    return np.asarray(c).reshape(-1, order="F")


def unvec(x, d):
    return np.asarray(x).reshape(d, d, order="F")


def matrix_rep(op, d):
    """Return the ``d^2 x d^2`` matrix of ``sqrt(d) * op`` for ``op`` in ``{"T", "L"}``.

    Column ``m`` is the vectorised image of the ``m``-th basis table.
    """
    d = check_dimension(d)
    try:
        apply = _OPERATORS[op]
    except KeyError:
        raise ValueError(f"op must be 'T' or 'L', got {op!r}") from None
    n = d * d
    out = np.empty((n, n), dtype=complex)
    for m in range(n):
        basis = np.zeros(n, dtype=complex)
        basis[m] = 1.0
        out[:, m] = vec(apply(unvec(basis, d)))
    return np.sqrt(d) * out


def block(M, d, j, k):
    """The ``(j, k)`` block of a ``d^2 x d^2`` matrix."""
    return M[j * d:(j + 1) * d, k * d:(k + 1) * d]


def t_block_closed_form(d, j, k):
    """``Omega^(-k) P_(-1) S^(-j) / sqrt(d)``, the predicted block of ``[sqrt(d) T]``."""
    return (
        matrix_power(omega_matrix(d), -k % d)
        @ negation_matrix(d)
        @ matrix_power(shift_matrix(d), -j % d)
    ) / np.sqrt(d)


def order_sign(d):
    """``(-1)^(d(d-1)/2)``."""
    return -1 if (d * (d - 1) // 2) % 2 else 1


def verify_T_order(d):
    """Check ``(sqrt(d) T)^(6d) = (-1)^(d(d-1)/2) I``.

    Returns
    -------
    sign : int
    residual : float
        Frobenius norm of ``M^(6d) - sign * I``.
    """
    d = check_dimension(d)
    M = matrix_rep("T", d)
    sign = order_sign(d)
    residual = np.linalg.norm(matrix_power(M, 6 * d) - sign * np.eye(d * d))
    return sign, float(residual)


def verify_L_order(d):
    """Frobenius norm of ``(sqrt(d) L)^(4d) - I``."""
    d = check_dimension(d)
    M = matrix_rep("L", d)
    return float(np.linalg.norm(matrix_power(M, 4 * d) - np.eye(d * d)))


def l_fourth_power_residual(d, n_tables=20, random_state=None):
    """Max gap of ``(sqrt(d) L)^4 c = F^* R^(-2) F c`` over random complex tables."""
    d = check_dimension(d)
    rng = check_random_state(random_state)
    F = fourier_matrix(d)
    left = F.conj().T @ matrix_power(r_matrix(d), -2) @ F
    worst = 0.0
    for _ in range(n_tables):
        c = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        x = c
        for _ in range(4):
            x = np.sqrt(d) * reconstruct_L(x)
        worst = max(worst, float(np.max(np.abs(x - left @ c))))
    return worst


def verify_rsquaref_lemma(d):
    """Residuals of the two identities for ``R^2 F``.

    ``res1`` is the gap of ``(R^2 F)^2 = zeta^(-6(d-1)) (RF) R^(-2) (RF)^(-1)``
    and ``res2`` the gap of ``(R^2 F)^(2d) = (-1)^(d(d-1)/2) I``, both in
    Frobenius norm.
    """
    d = check_dimension(d)
    R = r_matrix(d)
    F = fourier_matrix(d)
    RF = R @ F
    R2F = R @ R @ F
    rhs = root_of_unity(24, -6 * (d - 1)) * RF @ matrix_power(R, -2) @ np.linalg.inv(RF)
    res1 = np.linalg.norm(R2F @ R2F - rhs)
    res2 = np.linalg.norm(matrix_power(R2F, 2 * d) - order_sign(d) * np.eye(d))
    return float(res1), float(res2)


def block_identity_residuals(d):
    """Residuals of the block structure of powers of ``[sqrt(d) T]``.

    Returns a dict with

    ``a_block``
        max gap between each block of ``M`` and :func:`t_block_closed_form`;
    ``c_sparsity``
        max entry of the blocks ``(j, k)`` of ``M^3`` with ``k != -j``;
    ``c_block``
        max gap of the blocks ``(j, -j)`` of ``M^3`` from
        ``R^2 Omega^(-j) F Omega^(-j)``;
    ``six_block``
        max gap of ``M^6`` from the block diagonal matrix with blocks
        ``Omega^(-j) (R^2 F)^2 Omega^j``.
    """
    d = check_dimension(d)
    M = matrix_rep("T", d)
    M3 = matrix_power(M, 3)
    M6 = M3 @ M3
    O = omega_matrix(d)
    R2 = matrix_power(r_matrix(d), 2)
    F = fourier_matrix(d)
    R2F = R2 @ F

    a_block = c_sparsity = c_block = six_block = 0.0
    for j in range(d):
        Oj = matrix_power(O, j)
        Ominus = matrix_power(O, -j)
        for k in range(d):
            a_block = max(a_block, np.max(np.abs(block(M, d, j, k) - t_block_closed_form(d, j, k))))
            b3 = block(M3, d, j, k)
            if (j + k) % d:
                c_sparsity = max(c_sparsity, np.max(np.abs(b3)))
            else:
                c_block = max(c_block, np.max(np.abs(b3 - R2 @ Ominus @ F @ Ominus)))
            expected = Ominus @ R2F @ R2F @ Oj if j == k else 0.0
            six_block = max(six_block, np.max(np.abs(block(M6, d, j, k) - expected)))
    return {
        "a_block": float(a_block),
        "c_sparsity": float(c_sparsity),
        "c_block": float(c_block),
        "six_block": float(six_block),
    }
