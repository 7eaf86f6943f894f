"""Input validation helpers shared by every module.

These mirror the ``sklearn.utils.validation`` idiom: each ``check_*``
function coerces its argument to a canonical array and raises
``ValueError`` (or a subclass) when the input is unusable.
"""

import numbers

import numpy as np

__all__ = [
    "NotUnitError",
    "ZeroCoordinateError",
    "ConditionError",
    "check_dimension",
    "check_table",
    "check_fiducial",
    "check_random_state",
]


class NotUnitError(ValueError):
    """A fiducial vector does not have unit norm."""


class ZeroCoordinateError(ValueError):
    """The coordinate needed for reconstruction vanishes.

    Translate the vector by a shift ``S**a`` (see ``clifford.act_shift_mod``)
    to move a nonzero coordinate into the required slot and retry.
    """


class ConditionError(ValueError):
    """An overlap table violates a structural precondition."""


def check_dimension(d):
    """Validate a Hilbert-space dimension and return it as ``int``."""
    if isinstance(d, bool) or not isinstance(d, numbers.Integral):
        raise TypeError(f"dimension must be an integer, got {type(d).__name__}")
    d = int(d)
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    return d


def check_table(c, d=None):
    """Return ``c`` as a finite square ``complex128`` array of side ``d >= 2``."""
    c = np.asarray(c, dtype=complex)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise ValueError(f"overlap table must be square, got shape {c.shape}")
    check_dimension(c.shape[0])
    if d is not None and c.shape[0] != d:
        raise ValueError(f"expected a {d}x{d} table, got side {c.shape[0]}")
    if not np.all(np.isfinite(c)):
        raise ValueError("overlap table contains NaN or Inf")
    return c


def check_fiducial(v, tol=1e-9, normalize=False):
    """Return ``v`` as a finite complex vector of unit norm.

    Parameters
    ----------
    v : array_like
        Candidate fiducial of length ``d >= 2``.
    tol : float
        Allowed deviation of ``||v||`` from 1.
    normalize : bool
        If true, rescale instead of rejecting (zero vectors are still
        rejected).
    """
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"fiducial must be a vector, got shape {v.shape}")
    check_dimension(v.shape[0])
    if not np.all(np.isfinite(v)):
        raise ValueError("fiducial contains NaN or Inf")
    norm = np.linalg.norm(v)
    if normalize:
        if norm == 0:
            raise NotUnitError("cannot normalise the zero vector")
        return v / norm
    if abs(norm - 1.0) > tol:
        raise NotUnitError(f"fiducial norm {norm!r} differs from 1 by more than {tol}")
    return v


def check_random_state(seed):
    """Turn ``seed`` into a ``numpy.random.Generator``."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)
