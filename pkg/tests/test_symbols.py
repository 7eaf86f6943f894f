import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import d2_table, random_unit
from whsic.d3family import FamilyPoint, family_overlaps
from whsic.overlaps import check_conditions, overlaps_from_fiducial, random_torus_table, reconstruct_T
from whsic.symbols import (
    hermitian_symbol_check,
    invariant_product_check,
    rank_one_criterion,
    riesz_check,
    symbols_from_table,
    table_from_symbols,
)
from whsic.validation import ZeroCoordinateError


def symbols_oracle(c):
    """p_j(w^k) = sum_r c_{-j,r} (w^(j+k))^(-r) by direct evaluation."""
    d = c.shape[0]
    w = np.exp(2j * np.pi / d)
    return np.array(
        [[sum(c[(-j) % d, r] * w ** (-(j + k) * r) for r in range(d)) for k in range(d)] for j in range(d)]
    )


def rank_one_oracle(c, tol=1e-8):
    ev = np.sort(np.linalg.eigvalsh(reconstruct_T(c)))
    return abs(ev[-1] - 1) <= tol and np.max(np.abs(ev[:-1])) <= tol


def test_origin_supported():
    c = np.zeros((4, 4), dtype=complex)
    c[0, 0] = 1
    P = symbols_from_table(c)
    assert np.allclose(P[0], 1) and np.allclose(P[1:], 0)


@pytest.mark.parametrize("d", range(2, 7))
def test_symbol_definition_and_linkage(d, rng):
    c = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    P = symbols_from_table(c)
    tc = reconstruct_T(c)
    # linkage: P[j-k, k] = d (Tc)_{jk}
    linked = np.array([[P[(j - k) % d, k] for k in range(d)] for j in range(d)])
    assert np.abs(linked - d * tc).max() < 1e-12
    assert np.abs(table_from_symbols(P) - c).max() < 1e-13


def test_linkage_plus_table():
    c = d2_table()
    P = symbols_from_table(c)
    assert abs(P[0, 0] - (1 + c[0, 1])) < 1e-15
    assert abs(P[0, 0] - 2 * reconstruct_T(c)[0, 0]) < 1e-15


def test_rank_one_on_sic(sic_fiducials):
    for v in sic_fiducials.values():
        ok, res = rank_one_criterion(overlaps_from_fiducial(v), m=0)
        assert ok and res < 1e-10


def test_rank_one_on_torus_table(rng):
    ok, res = rank_one_criterion(random_torus_table(5, rng))
    assert not ok and res > 1e-2


def test_rank_one_zero_coordinate():
    c = overlaps_from_fiducial(np.array([0, 1, 0, 0], dtype=complex))
    assert rank_one_criterion(c, m=1)[0]
    with pytest.raises(ZeroCoordinateError):
        rank_one_criterion(c, m=0)


def test_riesz_and_invariant_on_sic():
    for c in (d2_table(), family_overlaps(FamilyPoint(0.0))):
        assert riesz_check(c) <= 1e-10
        assert invariant_product_check(c) <= 1e-9


def test_negative_controls(rng):
    c = random_torus_table(4, rng)
    assert riesz_check(c) > 1e-2
    assert invariant_product_check(c) > 1e-2


def test_hermitian_symbol():
    assert hermitian_symbol_check(d2_table()) < 1e-13
    assert hermitian_symbol_check(family_overlaps(FamilyPoint(1.3, np.exp(0.4j)))) < 1e-12
    c = d2_table()
    c[1, 1] += 0.1  # c11 must be imaginary
    assert hermitian_symbol_check(c) >= 0.09


@pytest.mark.parametrize("d", range(2, 6))
def test_criteria_equivalence(d, rng):
    tables = [random_torus_table(d, rng) for _ in range(100)]
    for c in tables:
        cc = check_conditions(c, tol=1e-8).passed
        ro = rank_one_criterion(c)[0]
        assert cc == ro == rank_one_oracle(c)


@settings(max_examples=50, deadline=None)
@given(d=st.integers(2, 7), seed=st.integers(0, 2**32 - 1))
def test_symbol_oracle(d, seed):
    c = overlaps_from_fiducial(random_unit(d, np.random.default_rng(seed)))
    assert np.abs(symbols_from_table(c) - symbols_oracle(c)).max() < 1e-12
    # every pure state table is rank one
    assert rank_one_criterion(c)[0]
