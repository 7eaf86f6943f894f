"""Row symbols of an overlap table and the rank-one criteria built on them.

The j-th symbol is ``p_j(z) = sum_r c[-j, r] (omega^j z)^(-r)``. Symbols are
only ever evaluated on the d-th roots of unity, so a symbol table is the
``(d, d)`` array ``P[j, k] = p_j(omega^k)``. The link to the reconstruction
operator is ``P[j - k, k] = d * (Tc)[j, k]``.
"""

import numpy as np

from .validation import ZeroCoordinateError, check_table

__all__ = [
    "symbols_from_table",
    "table_from_symbols",
    "rank_one_criterion",
    "riesz_check",
    "invariant_product_check",
    "hermitian_symbol_check",
]


def symbols_from_table(c):
    """Evaluate every symbol at every d-th root of unity.

    ``p_j(omega^k)`` is the DFT of row ``-j`` read at frequency ``j + k``.
    """
    c = check_table(c)
    d = c.shape[0]
    j = np.arange(d)[:, None]
    k = np.arange(d)[None, :]
    spectra = np.fft.fft(c[(-np.arange(d)) % d], axis=1)
    return spectra[np.broadcast_to(j, (d, d)), (j + k) % d]


def table_from_symbols(P):
    """Invert :func:`symbols_from_table`."""
    P = check_table(P)
    d = P.shape[0]
    j = np.arange(d)[:, None]
    k = np.arange(d)[None, :]
    spectra = np.empty_like(P)
    spectra[np.broadcast_to(j, (d, d)), (j + k) % d] = P
    c = np.empty_like(P)
    c[(-np.arange(d)) % d] = np.fft.ifft(spectra, axis=1)
    return c


def _pick_m(P0, d):
    for m in range(d):
        if P0[m].real > 1.0 / (2 * d):
            return m
    return None


def rank_one_criterion(c, m=None, tol=1e-8):
    """Test ``Tc = v v^*`` with ``v_m != 0`` through the symbols of ``c``.

    The criterion is ``p_0(omega^m) > 0`` together with
    ``p_{j-k}(omega^k) p_0(omega^m) = p_{j-m}(omega^m) conj(p_{k-m}(omega^m))``
    for all ``j, k``.

    Parameters
    ----------
    c : array_like, shape (d, d)
    m : int, optional
        Coordinate assumed nonzero. When omitted, the first ``m`` with
        ``p_0(omega^m) > 1/(2d)`` is used.
    tol : float

    Returns
    -------
    passed : bool
    residual : float
        Largest gap in the product identity.

    Raises
    ------
    ZeroCoordinateError
        If ``p_0(omega^m)`` is not positive beyond ``tol``.
    """
    P = symbols_from_table(c)
    d = P.shape[0]
    if m is None:
        m = _pick_m(P[0], d)
        if m is None:
            return False, float("inf")
    m %= d
    pivot = P[0, m]
    if pivot.real <= tol:
        raise ZeroCoordinateError(f"p_0(omega^{m}) = {pivot:.3g}: v_{m} vanishes, try another m")
    j = np.arange(d)[:, None]
    k = np.arange(d)[None, :]
    col = P[(np.arange(d) - m) % d, m]
    lhs = P[(j - k) % d, np.broadcast_to(k, (d, d))] * pivot
    rhs = col[:, None] * col[None, :].conj()
    residual = float(np.max(np.abs(lhs - rhs)))
    passed = residual <= tol and abs(pivot.imag) <= tol
    return bool(passed), residual


def riesz_check(c):
    """Residual of the factorisation ``|p_j(z)|^2 = p_0(z) p_0(omega^j z)`` on the roots."""
    P = symbols_from_table(c)
    d = P.shape[0]
    j = np.arange(d)[:, None]
    k = np.arange(d)[None, :]
    rhs = P[0][None, :] * P[0][(j + k) % d]
    return float(np.max(np.abs(np.abs(P) ** 2 - rhs)))


def invariant_product_check(c):
    """Residual of ``prod_k p_j(omega^k) = prod_k p_0(omega^k)`` over all rows ``j``."""
    prods = np.prod(symbols_from_table(c), axis=1)
    return float(np.max(np.abs(prods - prods[0])))


def hermitian_symbol_check(c):
    """Residual of ``conj(p_j(z)) = p_{-j}(omega^j z)``; zero iff ``Tc`` is Hermitian."""
    P = symbols_from_table(c)
    d = P.shape[0]
    j = np.arange(d)[:, None]
    k = np.arange(d)[None, :]
    mirrored = P[np.broadcast_to((-j) % d, (d, d)), (j + k) % d]
    return float(np.max(np.abs(P.conj() - mirrored)))
