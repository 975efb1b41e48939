import math

import numpy as np
import pytest

import optowork


@pytest.mark.parametrize(
    "x, omega_t, expected",
    [
        (1.5, 0.0, [1.0, 1.0, 1.0, 0.0, 0.0, 0.0]),
        (1.5, 2 * math.pi, [1.0, 1.0, 1.0, 0.0, 0.0, 0.0]),
        (1.5, math.pi, [2.6, -2.6, -1.0, -2.4, 0.0, 0.0]),
        (
            2.0,
            math.pi / 2,
            [4 / 3, -1 / 3, 0.0, -2 / 3, 1 / math.sqrt(3), 2 / math.sqrt(3)],
        ),
    ],
)
def test_evolution_coefficients(x, omega_t, expected):
    p = optowork.System2Params(x=x, omega_t=omega_t)
    coefficients = optowork.evolution_coefficients(p)
    assert list(coefficients) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("p", pytest.SYSTEM2_POINTS)
def test_evolution_matrices(p):
    # momentum matrix is the inverse transpose of the position matrix
    position, momentum = optowork.evolution_matrices(p)
    np.testing.assert_allclose(position @ momentum.T, np.eye(3), atol=1e-12)


@pytest.mark.parametrize("p", pytest.SYSTEM2_POINTS)
def test_tripartite_cm(p):
    V = optowork.tripartite_cm(p)
    np.testing.assert_allclose(V, V.T)
    np.testing.assert_allclose(
        optowork.symplectic_eigenvalues(V),
        [0.5, 0.5, 0.5],
        atol=1e-9,
    )
    assert np.linalg.det(V) == pytest.approx(1 / 64, abs=1e-9)
    # positions and momenta do not mix
    np.testing.assert_equal(V[0::2, 1::2], 0.0)
    np.testing.assert_allclose(
        V,
        optowork.printed_tripartite_cm(p),
        rtol=0,
        atol=1e-12,
    )


@pytest.mark.parametrize("x", [1.1, 1.5, 2.5, 5.0])
def test_vacuum(x):
    p = optowork.System2Params(x=x)
    np.testing.assert_allclose(optowork.tripartite_cm(p), np.eye(6) / 2, atol=1e-15)
    f = optowork.optic_optic_cm(p)
    assert optowork.logarithmic_negativity(f) == 0.0
    assert optowork.work_single(f, pytest.HOMODYNE) == 0.0
    assert optowork.work_single(f, pytest.HETERODYNE) == 0.0


def test_worked_point():
    p = optowork.System2Params(x=1.5, omega_t=math.pi)
    f = optowork.optic_optic_cm(p)
    assert list(f) == pytest.approx([6.26, 6.26, 6.24], abs=1e-12)
    assert optowork.logarithmic_negativity(f) == pytest.approx(
        -math.log(0.04), abs=1e-10
    )
    # mirror returns to its initial state at t = pi
    V = optowork.tripartite_cm(p)
    np.testing.assert_allclose(V[4:, 4:], np.eye(2) / 2, atol=1e-12)
    np.testing.assert_allclose(V[:4, 4:], 0.0, atol=1e-12)


@pytest.mark.parametrize("x", [1.01, 1.1, 1.5, 2.5, 5.0])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_mirror_decoupling(x, k):
    p = optowork.System2Params(x=x, omega_t=k * math.pi)
    V = optowork.tripartite_cm(p)
    np.testing.assert_allclose(V[4:, 4:], np.eye(2) / 2, atol=1e-12)
    np.testing.assert_allclose(V[:4, 4:], 0.0, atol=1e-12)
    np.testing.assert_allclose(V[4:, :4], 0.0, atol=1e-12)


@pytest.mark.parametrize("x", [1.01, 1.02, 1.1, 1.5, 2.5])
def test_entanglement_close_to_threshold(x):
    # optical pair is pure at t = pi
    p = optowork.System2Params(x=x, omega_t=math.pi)
    f = optowork.optic_optic_cm(p)
    assert optowork.logarithmic_negativity(f) == pytest.approx(
        2 * math.log((x + 1) / (x - 1)), abs=1e-6
    )
    assert f.x * f.y - f.z**2 == pytest.approx(0.25, abs=1e-6)


def test_periodicity():
    for omega_t in [0.3, 1.0, 2.5]:
        p = optowork.System2Params(x=2.5, omega_t=omega_t)
        q = optowork.System2Params(x=2.5, omega_t=omega_t + 2 * math.pi)
        np.testing.assert_allclose(
            optowork.tripartite_cm(p),
            optowork.tripartite_cm(q),
            atol=1e-10,
        )


@pytest.mark.parametrize(
    "x, omega_t, error",
    [
        (1.0, 0.0, optowork.DomainError),
        (0.5, 0.0, optowork.DomainError),
        (1.0001, math.pi, optowork.DomainError),
        (1.000001, 1.0, optowork.DomainError),
        (1.5, math.inf, ValueError),
        (1.5, math.nan, ValueError),
    ],
)
def test_params_errors(x, omega_t, error):
    with pytest.raises(error):
        optowork.System2Params(x=x, omega_t=omega_t)
