"""Overlap tables, the reconstruction operators T and L, and SIC certification.

An overlap table is a ``(d, d)`` complex array ``c`` with
``c[j, k] = <S^j Omega^k v, v> = v^* S^j Omega^k v`` for a fiducial ``v``.
Row index ``j`` is the shift, column index ``k`` the modulation; both are
read mod ``d``.
"""

from dataclasses import asdict, dataclass

import numpy as np

from .heisenberg import root_of_unity
from .validation import (
    ConditionError,
    ZeroCoordinateError,
    check_dimension,
    check_fiducial,
    check_random_state,
    check_table,
)

__all__ = [
    "VerificationReport",
    "overlaps_from_fiducial",
    "reconstruct_T",
    "reconstruct_L",
    "structural_residuals",
    "check_conditions",
    "check_trace_powers",
    "trace_powers",
    "characteristic_polynomial",
    "characterization",
    "extract_fiducial",
    "frame_potential",
    "potential_bound",
    "quartic_row_sums",
    "random_torus_table",
    "identity_table",
    "trace_table",
]

STRUCT_TOL = 1e-9
QUARTIC_TOL = 1e-8


@dataclass(frozen=True)
class VerificationReport:
    """Residuals of the four SIC conditions on an overlap table.

    ``residual_hermitian`` measures condition (i), ``residual_norm``
    condition (ii), ``residual_torus`` condition (iii) and
    ``residual_quartic`` the trace condition ``tr((Tc)^4) = 1``.
    """

    residual_hermitian: float
    residual_norm: float
    residual_torus: float
    residual_quartic: float
    tol: float
    quartic_tol: float
    passed: bool

    def to_dict(self):
        return asdict(self)


def _minus(d):
    return (-np.arange(d)) % d


def _jk_phase(d, sign=-1):
    """Matrix of ``omega**(sign*j*k)``."""
    idx = np.arange(d)
    return root_of_unity(d, sign * np.outer(idx, idx))


def identity_table(d):
    """Table supported at the origin with ``c[0, 0] = 1``; ``T`` maps it to ``I/d``."""
    d = check_dimension(d)
    c = np.zeros((d, d), dtype=complex)
    c[0, 0] = 1.0
    return c


def overlaps_from_fiducial(v):
    """Compute the overlap table of a unit vector.

    Row ``j`` is a DFT of ``m -> v[m] * conj(v[m + j])``, so the whole table
    costs ``O(d^2 log d)``.

    Raises
    ------
    NotUnitError
        If ``||v||`` differs from 1 by more than ``1e-9``.
    """
    return _overlap_table(check_fiducial(v))


def _overlap_table(v):
    # no norm check: the optimiser evaluates this off the sphere
    d = v.shape[0]
    shifted = np.stack([np.roll(v, -j) for j in range(d)])
    return d * np.fft.ifft(v[None, :] * shifted.conj(), axis=1)


def trace_table(X):
    """Return ``t[j, k] = tr(S^j Omega^k X)`` for a ``(d, d)`` matrix ``X``.

    For ``X = v v^*`` this is the overlap table of ``v``.
    """
    X = check_table(X)
    d = X.shape[0]
    b = np.arange(d)
    diags = np.stack([X[b, (b + j) % d] for j in range(d)])
    return d * np.fft.ifft(diags, axis=1)


def reconstruct_T(c):
    """Apply the reconstruction operator ``Tc = (1/d) sum c_jk (S^j Omega^k)^*``.

    For overlaps of a unit vector ``v`` this returns ``v v^*``.
    """
    c = check_table(c)
    d = c.shape[0]
    rows = np.fft.fft(c, axis=1)
    a = np.arange(d)[:, None]
    b = np.arange(d)[None, :]
    return rows[(b - a) % d, np.broadcast_to(a, (d, d))] / d


def reconstruct_L(c):
    """Apply ``Lc = (1/d) sum c_jk S^{-j} Omega^{-k}``, the phase-twisted variant of T."""
    c = check_table(c)
    d = c.shape[0]
    rows = np.fft.fft(c, axis=1)
    a = np.arange(d)[:, None]
    b = np.arange(d)[None, :]
    return rows[(b - a) % d, np.broadcast_to(b, (d, d))] / d


def structural_residuals(c):
    """Return the residuals of conditions (i), (ii), (iii) as a tuple of floats."""
    c = check_table(c)
    d = c.shape[0]
    m = _minus(d)
    mirrored = _jk_phase(d) * c[np.ix_(m, m)].conj()
    res_herm = float(np.max(np.abs(c - mirrored)))
    res_norm = float(abs(c[0, 0] - 1.0))
    off = np.abs(c) ** 2 - 1.0 / (d + 1)
    off[0, 0] = 0.0
    res_torus = float(np.max(np.abs(off)))
    return res_herm, res_norm, res_torus


def check_conditions(c, tol=STRUCT_TOL, quartic_tol=QUARTIC_TOL):
    """Certify whether ``c`` is the overlap table of a Weyl-Heisenberg SIC.

    The four conditions are (i) ``c_jk = omega^{-jk} conj(c_{-j,-k})``,
    (ii) ``c_00 = 1``, (iii) ``|c_jk|^2 = 1/(d+1)`` off the origin and
    (iv) ``tr((Tc)^4) = 1``. Together they hold exactly when ``Tc`` is a
    rank-one projector ``v v^*`` whose orbit is equiangular.

    Parameters
    ----------
    c : array_like, shape (d, d)
    tol : float
        Tolerance for the structural residuals (i)-(iii).
    quartic_tol : float
        Tolerance for the quartic trace residual.

    Returns
    -------
    VerificationReport
    """
    if tol <= 0 or quartic_tol <= 0:
        raise ValueError("tolerances must be positive")
    c = check_table(c)
    res_herm, res_norm, res_torus = structural_residuals(c)
    tc = reconstruct_T(c)
    t2 = tc @ tc
    res_quartic = float(abs(np.trace(t2 @ t2) - 1.0))
    passed = (
        res_herm <= tol and res_norm <= tol and res_torus <= tol
        and res_quartic <= quartic_tol
    )
    return VerificationReport(
        residual_hermitian=res_herm,
        residual_norm=res_norm,
        residual_torus=res_torus,
        residual_quartic=res_quartic,
        tol=float(tol),
        quartic_tol=float(quartic_tol),
        passed=bool(passed),
    )


def check_trace_powers(c, tol=STRUCT_TOL):
    """Return ``(tr(Tc), tr((Tc)^2), tr((Tc)^4))`` for a table satisfying (i)-(iii).

    The first two are 1 for every such table; the third is 1 only for SICs
    and strictly smaller otherwise.

    Raises
    ------
    ConditionError
        If any of (i)-(iii) is violated by more than ``tol``.
    """
    c = check_table(c)
    res = structural_residuals(c)
    if max(res) > tol:
        names = ("hermitian symmetry", "c_00 = 1", "equal moduli")
        bad = [f"{n} ({r:.3g})" for n, r in zip(names, res) if r > tol]
        raise ConditionError("table violates " + ", ".join(bad))
    tc = reconstruct_T(c)
    t2 = tc @ tc
    return np.trace(tc), np.trace(t2), np.trace(t2 @ t2)


def trace_powers(c, max_power):
    """Return ``[tr((Tc)^m) for m in 1..max_power]`` as a complex array."""
    tc = reconstruct_T(c)
    out = np.empty(max_power, dtype=complex)
    p = np.eye(tc.shape[0], dtype=complex)
    for m in range(max_power):
        p = p @ tc
        out[m] = np.trace(p)
    return out


def characteristic_polynomial(c):
    """Coefficients (highest degree first) of the characteristic polynomial of ``Tc``.

    ``Tc`` is Hermitianised before the eigensolve; for tables obeying
    condition (i) this changes nothing beyond rounding.
    """
    tc = reconstruct_T(c)
    evals = np.linalg.eigvalsh((tc + tc.conj().T) / 2)
    return np.real(np.poly(evals))


def characterization(c, tol=QUARTIC_TOL):
    """Evaluate the equivalent rank-one conditions on ``Tc``.

    Returns a dict with booleans ``quartic`` (``tr((Tc)^4) = 1``),
    ``charpoly`` (characteristic polynomial ``x^d - x^(d-1)``),
    ``trace_powers`` (``tr((Tc)^m) = 1`` for ``m = 1..2d``) and
    ``structural`` (conditions (i)-(iii)), all at tolerance ``tol``.
    """
    c = check_table(c)
    d = c.shape[0]
    structural = max(structural_residuals(c)) <= tol
    powers = trace_powers(c, 2 * d)
    target = np.zeros(d + 1)
    target[0], target[1] = 1.0, -1.0
    charpoly = characteristic_polynomial(c)
    return {
        "structural": bool(structural),
        "quartic": bool(abs(powers[3] - 1.0) <= tol),
        "charpoly": bool(np.max(np.abs(charpoly - target)) <= tol),
        "trace_powers": bool(np.max(np.abs(powers - 1.0)) <= tol),
    }


def extract_fiducial(c, tol=STRUCT_TOL, quartic_tol=QUARTIC_TOL, min_weight=1e-8):
    """Recover the fiducial ``v`` with ``Tc = v v^*`` from a certified table.

    Uses ``v = conj(c) @ ones / (d * conj(v_0))`` with ``|v_0|^2 = (Tc)_00``.
    The global phase is fixed so that ``v_0 > 0``.

    Raises
    ------
    ConditionError
        If ``c`` does not pass :func:`check_conditions`.
    ZeroCoordinateError
        If ``(Tc)_00 <= min_weight``; shift the table with
        ``clifford.act_shift_mod`` and retry.
    """
    c = check_table(c)
    report = check_conditions(c, tol=tol, quartic_tol=quartic_tol)
    if not report.passed:
        raise ConditionError(f"table is not a SIC overlap table: {report}")
    d = c.shape[0]
    weight = reconstruct_T(c)[0, 0].real
    if weight <= min_weight:
        raise ZeroCoordinateError(
            f"(Tc)_00 = {weight:.3g}: v_0 vanishes; apply a Clifford shift and retry"
        )
    v = c.conj().sum(axis=1) / (d * np.sqrt(weight))
    return v / np.linalg.norm(v)


def potential_bound(d):
    """Minimum ``2 / (d (d+1))`` of the frame potential on the unit sphere."""
    d = check_dimension(d)
    return 2.0 / (d * (d + 1))


def frame_potential(v):
    """Return ``(1/d^2) sum_{j,k} |<S^j Omega^k v, v>|^4`` for a unit vector."""
    c = overlaps_from_fiducial(v)
    d = c.shape[0]
    return float(np.sum(np.abs(c) ** 4) / d**2)


def quartic_row_sums(v, s, t):
    """Return ``sum_r v_r conj(v_{r+s}) conj(v_{r+t}) v_{r+s+t}``."""
    v = check_fiducial(v)
    return complex(np.sum(v * np.roll(v, -s).conj() * np.roll(v, -t).conj() * np.roll(v, -s - t)))


def random_torus_table(d, random_state=None):
    """Sample a table satisfying conditions (i)-(iii) exactly.

    Free entries get uniform phases; the entries fixed by ``(j,k) -> (-j,-k)``
    (only present for even ``d``) get a random sign times the phase that
    makes condition (i) hold.
    """
    d = check_dimension(d)
    rng = check_random_state(random_state)
    r = 1.0 / np.sqrt(d + 1)
    c = np.zeros((d, d), dtype=complex)
    for j in range(d):
        for k in range(d):
            mj, mk = (-j) % d, (-k) % d
            if (j, k) == (0, 0) or (mj, mk) < (j, k):
                continue
            if (mj, mk) == (j, k):
                sign = rng.choice((-1.0, 1.0))
                c[j, k] = sign * r * np.exp(-1j * np.pi * j * k / d)
            else:
                c[j, k] = r * np.exp(2j * np.pi * rng.random())
                c[mj, mk] = root_of_unity(d, -j * k) * np.conj(c[j, k])
    c[0, 0] = 1.0
    return c
