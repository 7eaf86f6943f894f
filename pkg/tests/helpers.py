"""Shared test data and independent oracles."""

import itertools

import numpy as np

S3 = np.sqrt(3.0)

# Reference d=2 fiducial and its projector, as quoted in the worked example.
REF_V2 = np.array([S3 + 1, 1 + 1j]) / (np.sqrt(2) * np.sqrt(3 + S3))
REF_TC2 = np.array([[S3 + 1, 1 - 1j], [1 + 1j, S3 - 1]]) / (2 * S3)


def d2_table(s01=1, s10=1, s11=1):
    """d=2 table with c01 = s01/sqrt3, c10 = s10/sqrt3, c11 = s11 i/sqrt3."""
    return np.array([[1.0, s01 / S3], [s10 / S3, 1j * s11 / S3]], dtype=complex)


def d2_sign_tables():
    return [d2_table(*s) for s in itertools.product((1, -1), repeat=3)]


def random_unit(d, rng):
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return v / np.linalg.norm(v)


def explicit_overlaps(v):
    """Oracle: c_jk = v^* S^j Omega^k v by dense matrices."""
    from whsic.heisenberg import displacement

    d = len(v)
    return np.array([[np.vdot(v, displacement(d, j, k) @ v) for k in range(d)] for j in range(d)])


# Lines printed by the acceptance suite; shown in the terminal summary.
ACCEPTANCE_LINES = []


def acceptance_line(label, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok
