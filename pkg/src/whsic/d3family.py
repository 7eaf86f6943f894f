"""Explicit families of SIC overlap tables in dimension 3 and deltoid geometry.

In ``d = 3`` the Riesz factorisation of the row symbols reduces to one
equation: the sum of three unimodular numbers with unit product, built from
row 2 of the table, must equal ``(1 - 2 z^3) / z^2`` where ``z = 2 c_01 / omega``.
That right side traces the 3-cusped hypocycloid (deltoid)
``w(theta) = 2 e^(i theta) + e^(-2 i theta)`` as ``z = -e^(i theta)``
runs over the circle. The achievable sums fill the closed deltoid, so the
equation forces them onto its boundary.

Boundary solutions are parametrised by an angle ``phi`` and a unimodular
``z20``. The branch relations together with conditions (i)-(iii) make the
table Hermitian and equiangular with the right Riesz factorisation for every
``z20``. They do not enforce the product invariant
``prod_k p_1(omega^k) = prod_k p_0(omega^k)``, and without it ``Tc`` is
generally not rank one. Since row 2 scales with ``z20``, the invariant fixes
``z20**3``. :func:`admissible_z20` returns the three solutions and
:meth:`FamilyPoint.snapped` moves a point onto the nearest one.
"""

from dataclasses import asdict, dataclass, replace

import numpy as np
from scipy.optimize import brentq

from .heisenberg import root_of_unity
from .overlaps import reconstruct_T
from .symbols import symbols_from_table
from .validation import check_random_state, check_table

__all__ = [
    "BRANCHES",
    "FamilyPoint",
    "PropositionReport",
    "hypocycloid_point",
    "deltoid_distance",
    "hyposet_membership",
    "family_overlaps",
    "triple_sum",
    "triple_terms",
    "admissible_z20",
    "sample_family",
    "proposition_check",
    "plot_deltoid",
]

BRANCHES = ("z1=z3", "z1=z2", "z2=z3")
OMEGA3 = root_of_unity(3)


@dataclass(frozen=True)
class FamilyPoint:
    """A point ``(phi, z20, branch)`` of the boundary parametrisation."""

    phi: float
    z20: complex = 1.0 + 0j
    branch: str = "z1=z3"

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"branch must be one of {BRANCHES}, got {self.branch!r}")
        if abs(abs(self.z20) - 1.0) > 1e-14:
            raise ValueError(f"z20 must be unimodular, |z20| = {abs(self.z20)!r}")
        object.__setattr__(self, "z20", complex(self.z20))
        object.__setattr__(self, "phi", float(self.phi))

    @classmethod
    def from_angles(cls, phi, z20_arg=0.0, branch="z1=z3"):
        return cls(phi, np.exp(1j * z20_arg), branch)

    def snapped(self):
        """Copy with ``z20`` replaced by the nearest admissible value.

        Returns ``self`` unchanged where the invariant is degenerate
        (both products vanish), since then every ``z20`` is allowed.
        """
        roots = admissible_z20(self.phi, self.branch)
        if roots is None:
            return self
        best = roots[np.argmin(np.abs(roots - self.z20))]
        return replace(self, z20=complex(best / abs(best)))


def hypocycloid_point(theta):
    """``2 e^(i theta) + e^(-2 i theta)``; cusps at ``theta = 0, 2pi/3, 4pi/3``."""
    theta = np.asarray(theta, dtype=float)
    return 2 * np.exp(1j * theta) + np.exp(-2j * theta)


def _deltoid_velocity(theta):
    return 2j * np.exp(1j * theta) - 2j * np.exp(-2j * theta)


def deltoid_distance(w, n_grid=720):
    """Euclidean distance from ``w`` to the deltoid curve.

    A grid scan brackets the nearest point and ``brentq`` then solves the
    stationarity condition ``Re(conj(w(theta) - w) w'(theta)) = 0``, which
    gives the distance to rounding accuracy.
    """
    w = complex(w)
    grid = np.linspace(0.0, 2 * np.pi, n_grid, endpoint=False)
    step = grid[1] - grid[0]
    dist = np.abs(hypocycloid_point(grid) - w)

    def slope(t):
        return float(np.real(np.conj(hypocycloid_point(t) - w) * _deltoid_velocity(t)))

    best = float(dist.min())
    for i in np.argsort(dist)[:4]:
        lo, hi = grid[i] - step, grid[i] + step
        s_lo, s_hi = slope(lo), slope(hi)
        if s_lo == 0.0:
            t = lo
        elif s_hi == 0.0:
            t = hi
        elif s_lo * s_hi < 0:
            t = brentq(slope, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
        else:
            continue
        best = min(best, float(abs(hypocycloid_point(t) - w)))
    return best


def hyposet_membership(w, tol=1e-9, n_grid=2880):
    """Classify ``w`` against ``{z1 + z2 + z3 : z1 z2 z3 = 1, |zj| = 1}``.

    Returns ``"boundary"``, ``"inside"`` or ``"outside"``. For fixed ``phi``
    the achievable sums with ``z2 = e^(i phi)`` fill the chord
    ``e^(i phi) + s e^(-i phi / 2)``, ``s`` in ``[-2, 2]``; ``w`` is inside
    when some ``phi`` puts it on its chord.
    """
    w = complex(w)
    if abs(w) > 3 + tol:
        return "outside"
    if deltoid_distance(w) <= tol:
        return "boundary"

    def gap(phi):
        return float(np.imag(w * np.exp(0.5j * phi)) - np.sin(1.5 * phi))

    def chord(phi):
        return float(np.real(w * np.exp(0.5j * phi)) - np.cos(1.5 * phi))

    grid = np.linspace(0.0, 4 * np.pi, n_grid + 1)
    vals = np.array([gap(p) for p in grid])
    for i in range(n_grid):
        a, b = vals[i], vals[i + 1]
        if a == 0.0:
            phi = grid[i]
        elif a * b < 0:
            phi = brentq(gap, grid[i], grid[i + 1], xtol=1e-14)
        else:
            continue
        if abs(chord(phi)) <= 2.0:
            return "inside"
    return "outside"


def _row2(phi, z20, branch):
    half = np.exp(0.5j * phi)
    full = np.exp(1j * phi)
    if branch == "z1=z3":
        rel = (1.0, full, half)
    elif branch == "z1=z2":
        rel = (1.0, 1 / half, half)
    else:
        rel = (1.0, 1 / half, 1 / full)
    return np.array(rel) * z20 / 2


def family_overlaps(p):
    """Build the ``3 x 3`` overlap table for a :class:`FamilyPoint`.

    ``c_01 = omega z / 2`` with ``z = -e^(-i phi / 2)``, ``c_02 = conj(c_01)``,
    row 2 from the branch relations and row 1 from condition (i).
    The table only passes ``check_conditions`` when ``p.z20`` satisfies the
    product invariant; see :func:`admissible_z20`.
    """
    if not isinstance(p, FamilyPoint):
        raise TypeError("expected a FamilyPoint")
    z = -np.exp(-0.5j * p.phi)
    c = np.zeros((3, 3), dtype=complex)
    c[0, 0] = 1.0
    c[0, 1] = OMEGA3 * z / 2
    c[0, 2] = np.conj(c[0, 1])
    c[2] = _row2(p.phi, p.z20, p.branch)
    for k in range(3):
        c[1, k] = root_of_unity(3, -k) * np.conj(c[2, (-k) % 3])
    return c


def triple_terms(c):
    """The unimodular terms ``(z20 conj(z22), z21 conj(z20), z22 conj(z21))`` with ``z = 2c``."""
    c = check_table(c, d=3)
    z20, z21, z22 = 2 * c[2]
    return z20 * np.conj(z22), z21 * np.conj(z20), z22 * np.conj(z21)


def triple_sum(c):
    return complex(sum(triple_terms(c)))


def _p0_on_roots(phi):
    # p_0(omega^k) = 1 - cos(2 pi (2k+1)/3 - phi/2); the sine form keeps the
    # near-zero value at small phi accurate instead of cancelling.
    k = np.arange(3)
    return 2 * np.sin(np.pi * (2 * k + 1) / 3 - phi / 4) ** 2


def admissible_z20(phi, branch="z1=z3", degenerate_tol=1e-30):
    """The three unimodular ``z20`` satisfying the product invariant at ``phi``.

    Returns ``None`` when both products vanish (then every ``z20`` works).
    """
    base = family_overlaps(FamilyPoint(phi, 1.0, branch))
    p0 = np.prod(_p0_on_roots(phi))
    p1 = np.prod(symbols_from_table(base)[1])
    if abs(p1) < degenerate_tol:
        return None
    ratio = p0 / p1
    cube = np.exp(1j * np.angle(ratio) / 3)
    return cube * root_of_unity(3, np.arange(3))


def sample_family(n, random_state=None, branch="z1=z3", admissible=True):
    """Draw ``n`` family points with ``phi`` and ``arg z20`` uniform on ``[0, 2pi)``.

    With ``admissible`` set, each ``z20`` is snapped to the nearest value
    allowed by the product invariant.
    """
    rng = check_random_state(random_state)
    points = []
    for phi, arg in rng.uniform(0.0, 2 * np.pi, size=(n, 2)):
        p = FamilyPoint.from_angles(phi, arg, branch)
        points.append(p.snapped() if admissible else p)
    return points


@dataclass(frozen=True)
class PropositionReport:
    """Residuals of conditions (a)-(d) for a ``3 x 3`` table.

    ``v0_weight`` is ``(Tc)_00 = |v_0|^2``; the characterisation only
    applies when it is positive.
    """

    hermitian: float
    riesz: float
    invariant: float
    moduli: float
    v0_weight: float
    tol: float
    passed: bool

    def to_dict(self):
        return asdict(self)


def proposition_check(c, tol=1e-9):
    """Check the four ``d = 3`` conditions for ``Tc = v v^*`` with ``v_0 != 0``.

    (a) ``p_0(z) = 1 + conj(c_01) z + c_01 z^2`` and ``p_2(z) = conj(p_1(omega^2 z))``;
    (b) ``|p_1(z)|^2 = p_0(z) p_0(omega z)``;
    (c) ``prod_k p_1(omega^k) = prod_k p_0(omega^k)``;
    (d) ``|c_01| = |c_1k| = 1/2``.
    """
    c = check_table(c, d=3)
    P = symbols_from_table(c)
    k = np.arange(3)
    z = root_of_unity(3, k)
    shape = 1 + np.conj(c[0, 1]) * z + c[0, 1] * z**2
    herm = max(
        np.max(np.abs(P[0] - shape)),
        np.max(np.abs(P[2] - np.conj(P[1][(k + 2) % 3]))),
    )
    riesz = np.max(np.abs(np.abs(P[1]) ** 2 - P[0] * P[0][(k + 1) % 3]))
    invariant = abs(np.prod(P[1]) - np.prod(P[0]))
    moduli = max(abs(abs(c[0, 1]) - 0.5), np.max(np.abs(np.abs(c[1]) - 0.5)))
    v0 = float(reconstruct_T(c)[0, 0].real)
    residuals = (float(herm), float(riesz), float(invariant), float(moduli))
    passed = max(residuals) <= tol and v0 > tol
    return PropositionReport(*residuals, v0_weight=v0, tol=float(tol), passed=bool(passed))


def plot_deltoid(path, sums=(), n_boundary=720):
    """Write an SVG of the deltoid with the given complex points overlaid."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    theta = np.linspace(0.0, 2 * np.pi, n_boundary + 1)
    curve = hypocycloid_point(theta)
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.plot(curve.real, curve.imag, lw=1.2, color="k")
    sums = np.asarray(list(sums), dtype=complex)
    if sums.size:
        ax.scatter(sums.real, sums.imag, s=6, color="tab:red", zorder=3)
    ax.set_aspect("equal")
    ax.set_xlabel("Re w")
    ax.set_ylabel("Im w")
    fig.savefig(path, format="svg", bbox_inches="tight")
    plt.close(fig)
