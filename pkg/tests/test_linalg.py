import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from relsub.linalg import (
    exact_equal,
    matmul,
    max_abs,
    null_space,
    realify_antilinear,
    split_realified,
)

S1 = np.array([[0, 1], [1, 0]], dtype=complex)
S2 = np.array([[0, -1j], [1j, 0]])
S3 = np.array([[1, 0], [0, -1]], dtype=complex)


def complex_matrices(n):
    reals = arrays(np.float64, (n, n), elements=st.floats(-10, 10))
    return st.tuples(reals, reals).map(lambda ab: ab[0] + 1j * ab[1])


def test_matmul_identity():
    eye = np.eye(2)
    assert exact_equal(matmul(eye, eye), eye)


def test_matmul_pauli_product():
    assert exact_equal(matmul(S1, S2), 1j * S3)


def test_matmul_gamma_block_product():
    # block forms written out by hand: offdiag(I, I) times offdiag(-s3, s3)
    g0 = np.block([[np.zeros((2, 2)), np.eye(2)], [np.eye(2), np.zeros((2, 2))]])
    g3 = np.block([[np.zeros((2, 2)), -S3], [S3, np.zeros((2, 2))]])
    assert exact_equal(matmul(g0, g3), np.diag([1.0, -1.0, -1.0, 1.0]))


def test_matmul_shape_mismatch():
    with pytest.raises(ValueError):
        matmul(np.eye(2), np.eye(3))


@seed(7)
@settings(max_examples=50, deadline=None)
@given(a=complex_matrices(3), b=complex_matrices(3), c=complex_matrices(3))
def test_matmul_associative(a, b, c):
    scale = max(1.0, max_abs(a) * max_abs(b) * max_abs(c))
    assert max_abs(matmul(matmul(a, b), c) - matmul(a, matmul(b, c))) <= 1e-10 * scale


def test_null_space_zero_matrix():
    res = null_space(np.zeros((2, 2)))
    assert res.dimension == 2
    assert len(res.basis) == 2


def test_null_space_identity():
    res = null_space(np.eye(4))
    assert res.dimension == 0
    assert res.basis == []


def test_null_space_rest_frame_operator():
    # gamma0 - 1 at unit mass, written out entrywise; rank 2 by inspection
    m = np.array(
        [
            [-1, 0, 1, 0],
            [0, -1, 0, 1],
            [1, 0, -1, 0],
            [0, 1, 0, -1],
        ],
        dtype=complex,
    )
    res = null_space(m)
    assert res.dimension == 2
    for v in res.basis:
        assert max_abs(m @ v) <= 1e-10 * max_abs(m)
    gram = np.array([[np.vdot(a, b) for b in res.basis] for a in res.basis])
    assert max_abs(gram - np.eye(2)) <= 1e-12


def test_null_space_singular_values_sorted():
    rng = np.random.default_rng(3)
    m = rng.normal(size=(5, 5))
    res = null_space(m)
    sv = res.singular_values
    assert all(sv[i] >= sv[i + 1] for i in range(len(sv) - 1))


def test_null_space_rejects_empty_and_bad_tol():
    with pytest.raises(ValueError):
        null_space(np.zeros((0, 2)))
    with pytest.raises(ValueError):
        null_space(np.eye(2), tol=0.0)


def test_null_space_preserves_real_dtype():
    res = null_space(np.zeros((2, 2)))
    assert all(not np.iscomplexobj(v) for v in res.basis)


def test_realify_identity():
    assert exact_equal(realify_antilinear(np.eye(1), np.zeros((1, 1))), np.eye(2))


def test_realify_pure_conjugation():
    out = realify_antilinear(np.zeros((1, 1)), np.eye(1))
    assert exact_equal(out, np.array([[1.0, 0.0], [0.0, -1.0]]))


def test_realify_i_times_conjugation():
    out = realify_antilinear(np.zeros((1, 1)), 1j * np.eye(1))
    assert exact_equal(out, np.array([[0.0, 1.0], [1.0, 0.0]]))


def test_realify_shape_mismatch():
    with pytest.raises(ValueError):
        realify_antilinear(np.eye(2), np.eye(3))


@seed(11)
@settings(max_examples=50, deadline=None)
@given(
    lin=complex_matrices(3),
    anti=complex_matrices(3),
    vre=arrays(np.float64, (3,), elements=st.floats(-5, 5)),
    vim=arrays(np.float64, (3,), elements=st.floats(-5, 5)),
)
def test_realify_matches_direct_action(lin, anti, vre, vim):
    v = vre + 1j * vim
    direct = lin @ v + anti @ v.conj()
    stacked = realify_antilinear(lin, anti) @ np.concatenate([vre, vim])
    recovered = split_realified(stacked)
    scale = max(1.0, (max_abs(lin) + max_abs(anti)) * max(1.0, max_abs(v)))
    assert max_abs(recovered - direct) <= 1e-10 * scale
