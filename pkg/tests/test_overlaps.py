import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import REF_V2, d2_sign_tables, d2_table, explicit_overlaps, random_unit
from whsic.heisenberg import displacement, fourier_matrix
from whsic.overlaps import (
    characteristic_polynomial,
    characterization,
    check_conditions,
    check_trace_powers,
    extract_fiducial,
    frame_potential,
    identity_table,
    overlaps_from_fiducial,
    potential_bound,
    quartic_row_sums,
    random_torus_table,
    reconstruct_L,
    reconstruct_T,
    trace_table,
)
from whsic.validation import ConditionError, NotUnitError, ZeroCoordinateError


def test_e0_table():
    c = overlaps_from_fiducial(np.array([1.0, 0.0]))
    assert np.allclose(c, [[1, 1], [0, 0]])


def test_reference_vector_table():
    # The printed vector has c11 = -i/sqrt3, i.e. the (+,+,-) sign choice.
    c = overlaps_from_fiducial(REF_V2)
    assert np.abs(c - d2_table(1, 1, -1)).max() < 1e-15


@pytest.mark.parametrize("d", range(2, 7))
def test_fft_matches_explicit_sum(d, rng):
    v = random_unit(d, rng)
    assert np.abs(overlaps_from_fiducial(v) - explicit_overlaps(v)).max() < 1e-13


def test_d3_equiangular_example():
    v = np.array([0, 1, -1]) / np.sqrt(2)
    c = overlaps_from_fiducial(v)
    off = np.abs(c) ** 2
    off[0, 0] = 0.25
    assert np.abs(off - 0.25).max() < 1e-15


def test_not_unit_rejected():
    with pytest.raises(NotUnitError):
        overlaps_from_fiducial(np.array([1.0, 1.0]))


@pytest.mark.parametrize("d", range(2, 9))
def test_tight_frame_round_trip(d, rng):
    for _ in range(100):
        v = random_unit(d, rng)
        assert np.linalg.norm(reconstruct_T(overlaps_from_fiducial(v)) - np.outer(v, v.conj())) <= 1e-11


def test_trace_table_inverts_T(rng):
    X = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    assert np.abs(reconstruct_T(trace_table(X)) - X).max() < 1e-13


def test_reconstruct_identity_table():
    for d in (2, 5):
        assert np.allclose(reconstruct_T(identity_table(d)), np.eye(d) / d)
        assert np.allclose(reconstruct_L(identity_table(d)), np.eye(d) / d)


@pytest.mark.parametrize("d", range(2, 6))
def test_T_matches_definition(d, rng):
    c = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    expected = sum(c[j, k] * displacement(d, j, k).conj().T for j in range(d) for k in range(d)) / d
    assert np.abs(reconstruct_T(c) - expected).max() < 1e-13


@pytest.mark.parametrize("d", range(2, 6))
def test_L_compact_form(d, rng):
    c = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    F = fourier_matrix(d)
    Fs = F.conj().T
    expected = Fs @ (F * (Fs @ c @ Fs))
    assert np.abs(reconstruct_L(c) - expected).max() < 1e-12


def test_T_L_agree_where_phase_trivial(rng):
    d = 4
    c = np.zeros((d, d), dtype=complex)
    c[0, :] = rng.normal(size=d)
    c[:, 0] = rng.normal(size=d)
    assert np.abs(reconstruct_T(c) - reconstruct_L(c)).max() < 1e-14


@pytest.mark.parametrize("d", range(2, 7))
def test_T_hermitian_on_torus_tables(d, rng):
    tc = reconstruct_T(random_torus_table(d, rng))
    assert np.abs(tc - tc.conj().T).max() < 1e-13


def test_plus_table_passes():
    rep = check_conditions(d2_table())
    assert rep.passed
    assert max(rep.residual_hermitian, rep.residual_norm, rep.residual_torus, rep.residual_quartic) <= 1e-14


def test_real_c11_fails():
    c = d2_table()
    c[1, 1] = 1 / np.sqrt(3)
    rep = check_conditions(c)
    assert not rep.passed and rep.residual_hermitian > 0.5


def test_all_eight_signs_pass():
    assert all(check_conditions(c).passed for c in d2_sign_tables())


def test_report_serialises():
    d = check_conditions(d2_table()).to_dict()
    assert set(d) >= {"passed", "residual_quartic", "tol"}


def test_bad_tolerance():
    with pytest.raises(ValueError):
        check_conditions(d2_table(), tol=0)


@pytest.mark.parametrize("d", range(2, 7))
def test_trace_identities(d, rng):
    t1, t2, t4 = check_trace_powers(random_torus_table(d, rng))
    assert abs(t1 - 1) < 1e-12 and abs(t2 - 1) < 1e-12
    assert t4.real <= 1 + 1e-12


def test_trace_powers_plus_table():
    assert abs(check_trace_powers(d2_table())[2] - 1) < 1e-14


def test_non_sic_d4_quartic_below_one(rng):
    c = random_torus_table(4, rng)
    assert check_trace_powers(c)[2].real < 1
    evals = np.linalg.eigvalsh(reconstruct_T(c))
    assert np.sum(evals**4) < 1


def test_trace_powers_rejects_bad_table():
    with pytest.raises(ConditionError):
        check_trace_powers(overlaps_from_fiducial(np.array([1.0, 0.0])))


def test_characterisation_on_sic():
    flags = characterization(d2_table())
    assert all(flags.values())
    assert np.allclose(characteristic_polynomial(d2_table()), [1, -1, 0], atol=1e-14)


def test_extract_reference_vector():
    # Extraction from the table of the printed vector reproduces it.
    v = extract_fiducial(overlaps_from_fiducial(REF_V2))
    assert abs(abs(np.vdot(v, REF_V2)) - 1) < 1e-14


def test_extract_rejects_non_sic():
    with pytest.raises(ConditionError):
        extract_fiducial(overlaps_from_fiducial(np.array([1.0, 0.0])))


def test_extract_zero_coordinate():
    c = overlaps_from_fiducial(np.array([0, 1, -1]) / np.sqrt(2))
    with pytest.raises(ZeroCoordinateError):
        extract_fiducial(c)


def test_extract_round_trip_d3_family():
    from whsic.d3family import FamilyPoint, family_overlaps

    c = family_overlaps(FamilyPoint(0.0))
    v = extract_fiducial(c)
    assert np.abs(overlaps_from_fiducial(v) - c).max() < 1e-13


def test_potential_values():
    assert abs(frame_potential(REF_V2) - 1 / 3) < 1e-15
    assert abs(frame_potential(np.array([1.0, 0.0])) - 0.5) < 1e-15


@pytest.mark.parametrize("d", range(3, 7))
def test_potential_lower_bound(d, rng):
    vals = [frame_potential(random_unit(d, rng)) for _ in range(1000)]
    assert min(vals) >= potential_bound(d) - 1e-12


def test_quartic_row_sums(sic_fiducials):
    assert abs(quartic_row_sums(REF_V2, 0, 0) - 2 / 3) < 1e-14
    assert abs(quartic_row_sums(sic_fiducials[3], 1, 2)) < 1e-10
    assert abs(quartic_row_sums(np.array([1.0, 0, 0]), 0, 0) - 1) < 1e-15


@settings(max_examples=60, deadline=None)
@given(d=st.integers(2, 8), seed=st.integers(0, 2**32 - 1))
def test_torus_tables_satisfy_structure(d, seed):
    c = random_torus_table(d, seed)
    rep = check_conditions(c)
    assert max(rep.residual_hermitian, rep.residual_norm, rep.residual_torus) < 1e-14


@settings(max_examples=60, deadline=None)
@given(d=st.integers(2, 7), seed=st.integers(0, 2**32 - 1))
def test_fiducial_tables_hermitian(d, seed):
    v = random_unit(d, np.random.default_rng(seed))
    rep = check_conditions(overlaps_from_fiducial(v))
    assert rep.residual_hermitian < 1e-13 and rep.residual_norm < 1e-13
    assert rep.residual_quartic < 1e-12  # any pure state has tr(P^4) = 1
