import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from relsub.errors import OffShellError
from relsub.minkowski import (
    FourVector,
    components_from_spinor,
    half_pairing,
    minkowski_square,
    require_on_shell,
    spinor_pairing,
    spinor_to_vector,
    upper_spinor_matrix,
    vector_to_spinor,
)

coords = st.floats(-20, 20, allow_nan=False)


def test_minkowski_square_signature():
    assert minkowski_square(FourVector(2, 1, 1, 1)) == 1.0
    assert minkowski_square(FourVector(1, 1, 0, 0)) == 0.0


def test_vector_to_spinor_time_axis():
    s = vector_to_spinor(FourVector(1, 0, 0, 0))
    assert np.array_equal(s.upper, np.eye(2))


def test_vector_to_spinor_z_axis():
    s = vector_to_spinor(FourVector(0, 0, 0, 1))
    assert np.array_equal(s.upper, np.diag([1.0, -1.0]).astype(complex))


def test_vector_to_spinor_x_axis():
    s = vector_to_spinor(FourVector(0, 1, 0, 0))
    assert np.array_equal(s.upper, np.array([[0, 1], [1, 0]], dtype=complex))


def test_spinor_to_vector_identity():
    v = spinor_to_vector(np.eye(2))
    assert v == FourVector(1, 0, 0, 0)


def test_spinor_to_vector_readoff_diag():
    assert spinor_to_vector(np.diag([2.0, 0.0])) == FourVector(1, 0, 0, 1)


def test_spinor_to_vector_readoff_y():
    assert spinor_to_vector(np.array([[0, -1j], [1j, 0]])) == FourVector(0, 0, 1, 0)


def test_spinor_to_vector_rejects_non_hermitian():
    with pytest.raises(ValueError, match="Hermitian"):
        spinor_to_vector(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_spinor_pairing_values():
    assert spinor_pairing(FourVector(1, 0, 0, 0)) == pytest.approx(2.0)
    assert spinor_pairing(FourVector(1, 1, 0, 0)) == pytest.approx(0.0)
    assert spinor_pairing(FourVector(3, 1, 2, 1)) == pytest.approx(6.0)


def test_half_pairing_values():
    assert half_pairing(FourVector(1, 0, 0, 0), 1) == pytest.approx(1.0)
    assert half_pairing(FourVector(2.5, 0, 0, 0), 2) == pytest.approx(6.25)
    # (p0-p3)(p0+p3) + (-p1+ip2)(p1+ip2) at (2,1,1,1)
    assert half_pairing(FourVector(2, 1, 1, 1), 1) == pytest.approx(1.0)


def test_half_pairing_rejects_bad_index():
    with pytest.raises(ValueError):
        half_pairing(FourVector(1, 0, 0, 0), 3)


@seed(5)
@settings(max_examples=200, deadline=None)
@given(t=coords, x=coords, y=coords, z=coords)
def test_roundtrip_and_pairing_identities(t, x, y, z):
    v = FourVector(t, x, y, z)
    scale = max(1.0, abs(t), abs(x), abs(y), abs(z))
    back = spinor_to_vector(vector_to_spinor(v).upper)
    assert np.max(np.abs(back.as_array() - v.as_array())) <= 1e-12 * scale
    sq = minkowski_square(v)
    assert abs(spinor_pairing(v) - 2 * sq) <= 1e-12 * scale**2
    for dotted in (1, 2):
        assert abs(half_pairing(v, dotted) - sq) <= 1e-12 * scale**2


def test_complex_components_roundtrip():
    rng = np.random.default_rng(8)
    c = rng.normal(size=4) + 1j * rng.normal(size=4)
    back = components_from_spinor(upper_spinor_matrix(c))
    assert np.max(np.abs(back - c)) <= 1e-13


def test_require_on_shell():
    require_on_shell(FourVector(np.sqrt(2.0), 1, 0, 0), 1.0)
    with pytest.raises(OffShellError, match="off shell"):
        require_on_shell(FourVector(2, 0, 0, 0), 1.0)
