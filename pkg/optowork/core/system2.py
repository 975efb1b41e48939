import math
import typing

import numpy as np

import audobject

from optowork.core import define
from optowork.core.errors import DomainError
from optowork.core.gaussian import CovarianceMatrix
from optowork.core.gaussian import TwoModeStandardForm
from optowork.core.gaussian import reduce
from optowork.core.gaussian import standard_form
from optowork.core.parameter import system2_parameters


# Optical variances grow like 1/(x - 1)**2,
# below this ratio x*y - z**2 of the optical pair
# is not resolved in double precision.
_MIN_RATIO = 1.01


class System2Params(audobject.Object):
    r"""Parameters of the single-mirror system.

    The mirror couples to a Stokes mode with :math:`g_1`
    and to an anti-Stokes mode with :math:`g_2`.
    Only the oscillatory regime :math:`g_2 > g_1` is supported,
    where :math:`\Omega^2 = g_2^2 - g_1^2`.

    Args:
        x: coupling ratio :math:`g_2/g_1`
        omega_t: dimensionless time :math:`\Omega t`

    Raises:
        DomainError: if ``x`` is smaller than 1.01
        ValueError: if ``omega_t`` is not finite

    """

    def __init__(
        self,
        *,
        x: float = 1.5,
        omega_t: float = 0.0,
    ):
        _check_ratio(x)
        params = system2_parameters()
        params.x = x
        params.omega_t = omega_t
        self.x = params.x
        self.omega_t = params.omega_t


class EvolutionCoefficients(typing.NamedTuple):
    r"""Coefficients of the linear mode evolution.

    With :math:`c = \cos\Omega t` and :math:`s = \sin\Omega t`

    .. math::

        k_1 = \frac{x^2 - c}{x^2 - 1}, \quad
        k_2 = \frac{x^2 c - 1}{x^2 - 1}, \quad
        k_3 = c, \\
        l_1 = \frac{x(c - 1)}{x^2 - 1}, \quad
        l_2 = \frac{s}{\sqrt{x^2 - 1}}, \quad
        l_3 = \frac{x s}{\sqrt{x^2 - 1}}

    """

    k1: float
    k2: float
    k3: float
    l1: float
    l2: float
    l3: float


def evolution_coefficients(p: System2Params) -> EvolutionCoefficients:
    r"""Coefficients of the mode evolution at time :math:`\Omega t`.

    Args:
        p: system parameters

    Returns:
        evolution coefficients

    Raises:
        DomainError: if :math:`x \le 1`

    Examples:
        >>> evolution_coefficients(System2Params(x=1.5, omega_t=0.0))
        EvolutionCoefficients(k1=1.0, k2=1.0, k3=1.0, l1=0.0, l2=0.0, l3=0.0)
        >>> coefficients = evolution_coefficients(System2Params(x=1.5, omega_t=math.pi))
        >>> [round(v, 12) + 0.0 for v in coefficients]
        [2.6, -2.6, -1.0, -2.4, 0.0, 0.0]

    """  # noqa: E501
    _check_ratio(p.x)
    x2 = p.x**2
    c = math.cos(p.omega_t)
    s = math.sin(p.omega_t)
    root = math.sqrt(x2 - 1)
    return EvolutionCoefficients(
        k1=(x2 - c) / (x2 - 1),
        k2=(x2 * c - 1) / (x2 - 1),
        k3=c,
        l1=p.x * (c - 1) / (x2 - 1),
        l2=s / root,
        l3=p.x * s / root,
    )


def evolution_matrices(p: System2Params) -> typing.Tuple[np.ndarray, np.ndarray]:
    r"""Transfer matrices of position and momentum quadratures.

    Rows and columns are ordered as optic 1, optic 2, mirror.
    The matrices map initial to evolved quadratures,
    e.g. :math:`X_1(t) = k_1 X_1 + l_1 X_2 + l_2 X_d`.
    The mirror position picks up :math:`-l_3 X_2`,
    which keeps the evolution symplectic,
    i.e. the momentum matrix is the inverse transpose
    of the position matrix.

    Args:
        p: system parameters

    Returns:
        position and momentum transfer matrices

    """
    k1, k2, k3, l1, l2, l3 = evolution_coefficients(p)
    position = np.array(
        [
            [k1, l1, l2],
            [-l1, k2, l3],
            [l2, -l3, k3],
        ]
    )
    momentum = np.array(
        [
            [k1, -l1, -l2],
            [l1, k2, l3],
            [-l2, -l3, k3],
        ]
    )
    return position, momentum


def optic_optic_cm(p: System2Params) -> TwoModeStandardForm:
    r"""Standard form of the two optical sideband modes.

    Args:
        p: system parameters

    Returns:
        standard form with variances of optic 1 and optic 2
        and the position correlation between them

    Examples:
        >>> f = optic_optic_cm(System2Params(x=1.5, omega_t=math.pi))
        >>> [round(v, 12) for v in f]
        [6.26, 6.26, 6.24]

    """
    V = tripartite_cm(p)
    return standard_form(reduce(V, define.SYSTEM2_OPTIC_MODES))


def printed_tripartite_cm(p: System2Params) -> CovarianceMatrix:
    r"""Covariance matrix from the explicit trigonometric expressions.

    Independent of :func:`optowork.tripartite_cm`,
    which composes the evolution coefficients.
    The elements are

    .. math::

        v_{11} &= \frac{x^4 + (1 + c^2 - 4c)x^2 + c^2 + (x^2-1)s^2}
                       {(x^2-1)^2} \\
        v_{22} &= \frac{x^4 c^2 + (1 + c^2 - 4c)x^2 + 1 + x^2(x^2-1)s^2}
                       {(x^2-1)^2} \\
        v_{33} &= \frac{(1+x^2)s^2}{x^2-1} + c^2 \\
        v_{21} &= \frac{x(1+x^2)(1-c)^2}{(x^2-1)^2} + \frac{x s^2}{x^2-1} \\
        v_{31} &= \frac{1}{\sqrt{x^2-1}}
                  \left(\frac{2x^2 s - (1+x^2)sc}{x^2-1} + sc\right) \\
        v_{32} &= \frac{1}{\sqrt{x^2-1}}
                  \left(\frac{2x s - (1+x^2)x sc}{x^2-1} + x sc\right)

    in units of the vacuum variance 1,
    the result is divided by 2.

    Args:
        p: system parameters

    Returns:
        covariance matrix of optic 1, optic 2, mirror

    Raises:
        DomainError: if :math:`x \le 1`

    """
    _check_ratio(p.x)
    x = p.x
    x2 = x**2
    c = math.cos(p.omega_t)
    s = math.sin(p.omega_t)
    d = x2 - 1
    root = math.sqrt(d)

    v11 = (x2**2 + (1 + c**2 - 4 * c) * x2 + c**2 + d * s**2) / d**2
    v22 = (x2**2 * c**2 + (1 + c**2 - 4 * c) * x2 + 1 + x2 * d * s**2) / d**2
    v33 = (1 + x2) * s**2 / d + c**2
    v21 = x * (1 + x2) * (1 - c) ** 2 / d**2 + x * s**2 / d
    v31 = ((2 * x2 * s - (1 + x2) * s * c) / d + s * c) / root
    v32 = ((2 * x * s - (1 + x2) * x * s * c) / d + x * s * c) / root

    position = np.array(
        [
            [v11, v21, v31],
            [v21, v22, v32],
            [v31, v32, v33],
        ]
    )
    momentum = np.array(
        [
            [v11, -v21, -v31],
            [-v21, v22, v32],
            [-v31, v32, v33],
        ]
    )
    return _interleave(position, momentum) * define.VACUUM_VARIANCE


def tripartite_cm(p: System2Params) -> CovarianceMatrix:
    r"""Covariance matrix of the two optical modes and the mirror.

    All modes start in the vacuum.
    The evolved matrix is
    :math:`S_X S_X^T / 2` for the position
    and :math:`S_P S_P^T / 2` for the momentum quadratures,
    with the transfer matrices of
    :func:`optowork.evolution_matrices`.
    Positions and momenta stay uncorrelated.

    Args:
        p: system parameters

    Returns:
        covariance matrix of optic 1, optic 2, mirror

    Raises:
        DomainError: if :math:`x \le 1`

    Examples:
        >>> V = tripartite_cm(System2Params(x=2.5, omega_t=0.0))
        >>> bool(np.allclose(V, np.eye(6) / 2))
        True

    """
    position, momentum = evolution_matrices(p)
    return _interleave(
        position @ position.T * define.VACUUM_VARIANCE,
        momentum @ momentum.T * define.VACUUM_VARIANCE,
    )


def _check_ratio(x: float):
    if not x > 1:
        raise DomainError(
            f"Coupling ratio x={x} must be larger than 1, "
            "the hyperbolic regime is not supported."
        )
    if x < _MIN_RATIO:
        raise DomainError(
            f"Coupling ratio x={x} must be at least {_MIN_RATIO}, "
            "closer to 1 the entanglement of the optical modes "
            "exceeds double precision."
        )


def _interleave(
    position: np.ndarray,
    momentum: np.ndarray,
) -> np.ndarray:
    r"""Merge position and momentum blocks into (X, Y) per mode order."""
    n = position.shape[0]
    V = np.zeros((2 * n, 2 * n))
    V[0::2, 0::2] = position
    V[1::2, 1::2] = momentum
    return V
