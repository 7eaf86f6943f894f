import numpy as np
import pytest

from whsic.fourier_order import (
    block,
    block_identity_residuals,
    l_fourth_power_residual,
    matrix_rep,
    order_sign,
    t_block_closed_form,
    unvec,
    vec,
    verify_L_order,
    verify_rsquaref_lemma,
    verify_T_order,
)
from whsic.heisenberg import matrix_power
from whsic.overlaps import reconstruct_L, reconstruct_T


def test_vec_round_trip(rng):
    c = rng.normal(size=(4, 4))
    assert np.array_equal(unvec(vec(c), 4), c)
    assert np.array_equal(vec(c)[:4], c[:, 0])


def test_d2_zero_block():
    M = matrix_rep("T", 2)
    # P_{-1} is the identity on Z_2
    assert np.allclose(block(M, 2, 0, 0), np.eye(2) / np.sqrt(2))


@pytest.mark.parametrize("d", range(2, 9))
def test_unitary(d):
    for op in ("T", "L"):
        M = matrix_rep(op, d)
        assert np.abs(M.conj().T @ M - np.eye(d * d)).max() < 1e-13


@pytest.mark.parametrize("d", range(2, 6))
def test_action_consistency(d, rng):
    M = matrix_rep("T", d)
    for _ in range(20):
        c = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        assert np.abs(M @ vec(c) - vec(np.sqrt(d) * reconstruct_T(c))).max() < 1e-12


@pytest.mark.parametrize("d", range(2, 5))
def test_representation_powers(d, rng):
    for op, fn in (("T", reconstruct_T), ("L", reconstruct_L)):
        M = matrix_rep(op, d)
        c = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        for m in (2, 3, 6):
            x = c
            for _ in range(m):
                x = np.sqrt(d) * fn(x)
            assert np.abs(matrix_power(M, m) @ vec(c) - vec(x)).max() < 1e-11


@pytest.mark.parametrize("d,sign", [(2, -1), (3, -1), (4, 1), (5, 1), (6, -1), (7, -1), (8, 1)])
def test_T_order(d, sign):
    s, res = verify_T_order(d)
    assert s == sign == order_sign(d)
    assert res <= 1e-10
    # the opposite sign is genuinely wrong
    M = matrix_rep("T", d)
    assert np.linalg.norm(matrix_power(M, 6 * d) + sign * np.eye(d * d)) > 1


@pytest.mark.parametrize("d", range(2, 9))
def test_L_order(d):
    assert verify_L_order(d) <= 1e-9


@pytest.mark.parametrize("d", range(2, 7))
def test_L_fourth_power(d):
    assert l_fourth_power_residual(d, 20, random_state=d) <= 1e-11


@pytest.mark.parametrize("d", range(2, 9))
def test_rsquaref_lemma(d):
    r1, r2 = verify_rsquaref_lemma(d)
    assert r1 <= 1e-10 and r2 <= 1e-10


@pytest.mark.parametrize("d", range(2, 7))
def test_block_identities(d):
    res = block_identity_residuals(d)
    assert set(res) == {"a_block", "c_sparsity", "c_block", "six_block"}
    assert max(res.values()) <= 1e-12


def test_closed_form_block_shape():
    assert t_block_closed_form(3, 1, 2).shape == (3, 3)


def test_bad_operator():
    with pytest.raises(ValueError):
        matrix_rep("X", 3)
