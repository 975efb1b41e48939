import math
import typing

import numpy as np
import scipy.constants

import audobject

from optowork.core import define
from optowork.core.config import config
from optowork.core.errors import DomainError
from optowork.core.errors import UnstableSystem
from optowork.core.gaussian import CovarianceMatrix
from optowork.core.gaussian import TwoModeStandardForm
from optowork.core.gaussian import reduce
from optowork.core.gaussian import solve_lyapunov
from optowork.core.parameter import Parameter
from optowork.core.parameter import system1_parameters


class System1Params(audobject.Object):
    r"""Parameters of the two-cavity system driven by squeezed light.

    The coupling is given either as effective coupling ``G``
    or as cooperativity ``C``,
    related by :math:`C = 4G^2 / (\Gamma\kappa)`.
    Rates share one unit,
    usually the cavity damping ``kappa``.

    Args:
        kappa: cavity damping rate
        gamma: mechanical damping rate
        C: optomechanical cooperativity
        G: effective optomechanical coupling
        r: squeezing parameter of the two-mode squeezed input
        n_th: mean thermal phonon number of the mechanical baths

    Raises:
        ValueError: if a value is out of range
            or not exactly one of ``C`` and ``G`` is given
        TypeError: if a value is not a number
        DomainError: if squeezing ``r`` is too large
            to be represented in double precision

    Examples:
        >>> p = System1Params(C=34.0, r=1.0, n_th=1.0)
        >>> p.cooperativity
        34.0
        >>> round(p.coupling, 4)
        0.6519
        >>> abs(p.M**2 - p.N * (p.N + 1)) < 1e-12
        True

    """

    def __init__(
        self,
        *,
        kappa: float = 1.0,
        gamma: float = 0.05,
        C: float = None,
        G: float = None,
        r: float = 0.0,
        n_th: float = 0.0,
    ):
        if (C is None) == (G is None):
            raise ValueError("Exactly one of 'C' and 'G' has to be given.")

        params = system1_parameters()
        params.kappa = kappa
        params.gamma = gamma
        params.r = r
        params.n_th = n_th
        if C is not None:
            params.C = C
            C = params.C
        else:
            coupling = Parameter(
                value_type=float,
                description="effective coupling",
                value=G,
                interval=">=0",
            )
            G = coupling.value

        self.kappa = params.kappa
        self.gamma = params.gamma
        self.C = C
        self.G = G
        self.r = params.r
        self.n_th = params.n_th
        try:
            math.cosh(2 * self.r)
        except OverflowError as ex:
            raise DomainError(
                f"Squeezing parameter r={self.r} is too large, "
                "cosh(2r) exceeds double precision."
            ) from ex

    @property
    def cooperativity(self) -> float:
        r"""Cooperativity :math:`C = 4G^2/(\Gamma\kappa)`."""
        if self.C is not None:
            return self.C
        return 4 * self.G**2 / (self.gamma * self.kappa)

    @property
    def coupling(self) -> float:
        r"""Effective coupling :math:`G = \sqrt{C\Gamma\kappa}/2`."""
        if self.G is not None:
            return self.G
        return math.sqrt(self.C * self.gamma * self.kappa) / 2

    @property
    def M(self) -> float:
        r"""Bath correlation :math:`\sinh r \cosh r`."""
        return math.sinh(self.r) * math.cosh(self.r)

    @property
    def N(self) -> float:
        r"""Bath occupation :math:`\sinh^2 r`."""
        return math.sinh(self.r) ** 2


class PhysicalCavitySpec(audobject.Object):
    r"""Laboratory parameters of a single cavity.

    Args:
        pump_power: laser power in W
        mass: effective mirror mass in kg
        mechanical_frequency: mirror frequency in rad/s
        cavity_frequency: cavity frequency in rad/s
        laser_frequency: laser frequency in rad/s
        cavity_length: cavity length in m
        kappa: cavity damping rate in rad/s
        gamma: mechanical damping rate in rad/s

    Raises:
        ValueError: if a value is not positive
            (the pump power may be zero)

    """

    def __init__(
        self,
        *,
        pump_power: float,
        mass: float,
        mechanical_frequency: float,
        cavity_frequency: float,
        laser_frequency: float,
        cavity_length: float,
        kappa: float,
        gamma: float,
    ):
        self.pump_power = _checked(pump_power, "pump power", ">=0", "W")
        self.mass = _checked(mass, "mass", ">0", "kg")
        self.mechanical_frequency = _checked(
            mechanical_frequency, "mechanical frequency", ">0", "rad/s"
        )
        self.cavity_frequency = _checked(
            cavity_frequency, "cavity frequency", ">0", "rad/s"
        )
        self.laser_frequency = _checked(
            laser_frequency, "laser frequency", ">0", "rad/s"
        )
        self.cavity_length = _checked(cavity_length, "cavity length", ">0", "m")
        self.kappa = _checked(kappa, "cavity damping", ">0", "rad/s")
        self.gamma = _checked(gamma, "mechanical damping", ">0", "rad/s")


class ClosedFormBlocks(typing.NamedTuple):
    r"""Closed-form two-mode blocks of the steady state."""

    mirror_mirror: TwoModeStandardForm
    r"""Mirror 1 and mirror 2, :math:`(v_{11}, v_{11}, v_{13})`"""
    optic_optic: TwoModeStandardForm
    r"""Optic 1 and optic 2, :math:`(v_{22}, v_{22}, v_{57})`"""


class StabilityReport(typing.NamedTuple):
    r"""Result of :func:`optowork.stability_check`."""

    stable: bool
    r"""``True`` if all drift eigenvalues have negative real part"""
    max_real_part: float
    r"""Largest real part of the drift eigenvalues"""


def closed_form_blocks(p: System1Params) -> ClosedFormBlocks:
    r"""Mirror and optic blocks of the steady state in closed form.

    .. math::

        v_{11} &= \frac{\kappa C\cosh 2r + (1+2n)(\kappa+\Gamma(1+C))}
                       {2(\kappa+\Gamma)(1+C)} \\
        v_{13} &= \frac{\kappa C\sinh 2r}{2(\kappa+\Gamma)(1+C)} \\
        v_{22} &= \frac{(\Gamma+\kappa(1+C))\cosh 2r + (1+2n)\Gamma C}
                       {2(\kappa+\Gamma)(1+C)} \\
        v_{57} &= \frac{(\Gamma+\kappa(1+C))\sinh 2r}{2(\kappa+\Gamma)(1+C)}

    Args:
        p: system parameters

    Returns:
        standard forms of the mirror pair and the optic pair

    Examples:
        >>> blocks = closed_form_blocks(System1Params(C=34.0, r=1.0, n_th=1.0))
        >>> [round(v, 4) for v in blocks.mirror_mirror]
        [1.8526, 1.8526, 1.6777]

    """
    kappa, gamma = p.kappa, p.gamma
    C = p.cooperativity
    n = p.n_th
    ch = math.cosh(2 * p.r)
    sh = math.sinh(2 * p.r)
    denominator = 2 * (kappa + gamma) * (1 + C)

    v11 = (kappa * C * ch + (1 + 2 * n) * (kappa + gamma * (1 + C))) / denominator
    v13 = kappa * C * sh / denominator
    v22 = ((gamma + kappa * (1 + C)) * ch + (1 + 2 * n) * gamma * C) / denominator
    v57 = (gamma + kappa * (1 + C)) * sh / denominator

    return ClosedFormBlocks(
        mirror_mirror=TwoModeStandardForm(v11, v11, v13),
        optic_optic=TwoModeStandardForm(v22, v22, v57),
    )


def cooperativity_from_physical(s: PhysicalCavitySpec) -> float:
    r"""Cooperativity from laboratory parameters.

    .. math::

        C = \frac{8\Omega_c^2 P}
                 {m\Gamma\Omega_m\Omega_L L^2[(\kappa/2)^2 + \Omega_m^2]}

    Args:
        s: cavity specification

    Returns:
        cooperativity

    """
    numerator = 8 * s.cavity_frequency**2 * s.pump_power
    denominator = (
        s.mass
        * s.gamma
        * s.mechanical_frequency
        * s.laser_frequency
        * s.cavity_length**2
        * ((s.kappa / 2) ** 2 + s.mechanical_frequency**2)
    )
    return numerator / denominator


def drift_matrix(p: System1Params) -> np.ndarray:
    r"""Drift matrix of the quadrature fluctuations.

    Quadratures are ordered as
    :math:`(X_{d_1}, Y_{d_1}, X_{d_2}, Y_{d_2},
    X_{c_1}, Y_{c_1}, X_{c_2}, Y_{c_2})`,
    mirrors first.

    Args:
        p: system parameters

    Returns:
        :math:`8 \times 8` matrix
        :math:`((-\Gamma/2\,I, G\,I), (-G\,I, -\kappa/2\,I))`

    """
    identity = np.eye(4)
    G = p.coupling
    return np.block(
        [
            [-p.gamma / 2 * identity, G * identity],
            [-G * identity, -p.kappa / 2 * identity],
        ]
    )


def effective_coupling_from_physical(s: PhysicalCavitySpec) -> float:
    r"""Effective coupling from laboratory parameters.

    .. math::

        G = \sqrt{\frac{\Omega_c^2\hbar}{m\Omega_m}}
            \sqrt{\frac{2\kappa P}{\hbar\Omega_L}}
            \frac{1}{L\sqrt{(\kappa/2)^2 + \Omega_m^2}}

    Args:
        s: cavity specification

    Returns:
        effective coupling in rad/s

    """
    hbar = scipy.constants.hbar
    zero_point = math.sqrt(
        s.cavity_frequency**2 * hbar / (s.mass * s.mechanical_frequency)
    )
    photons = math.sqrt(2 * s.kappa * s.pump_power / (hbar * s.laser_frequency))
    detuning = math.sqrt((s.kappa / 2) ** 2 + s.mechanical_frequency**2)
    return zero_point * photons / (s.cavity_length * detuning)


def mirror_optic_block(p: System1Params) -> np.ndarray:
    r"""Cross correlations between mirrors and optics.

    Only available numerically
    from the Lyapunov solution.

    Args:
        p: system parameters

    Returns:
        :math:`4 \times 4` block with mirror rows and optic columns

    """
    V = steady_state_cm(p)
    return V[:4, 4:]


def noise_matrix(p: System1Params) -> np.ndarray:
    r"""Diffusion matrix of the stationary noise.

    Mechanical quadratures see thermal noise
    :math:`\Gamma(n_{th} + 1/2)`.
    Optical quadratures see the squeezed bath
    :math:`\kappa(N + 1/2)`
    with correlation :math:`+M\kappa` between the position quadratures
    and :math:`-M\kappa` between the momentum quadratures
    of the two cavities.

    Args:
        p: system parameters

    Returns:
        symmetric :math:`8 \times 8` matrix

    """
    mechanical = p.gamma * (p.n_th + define.VACUUM_VARIANCE)
    optical = p.kappa * (p.N + define.VACUUM_VARIANCE)
    D = np.diag([mechanical] * 4 + [optical] * 4)
    correlation = p.kappa * p.M
    x1, y1 = 2 * define.Mode.SYSTEM1_OPTIC_1, 2 * define.Mode.SYSTEM1_OPTIC_1 + 1
    x2, y2 = 2 * define.Mode.SYSTEM1_OPTIC_2, 2 * define.Mode.SYSTEM1_OPTIC_2 + 1
    D[x1, x2] = D[x2, x1] = correlation
    D[y1, y2] = D[y2, y1] = -correlation
    return D


def stability_check(p: System1Params) -> StabilityReport:
    r"""Check if the drift matrix is stable.

    Args:
        p: system parameters

    Returns:
        stability verdict and largest real part of the spectrum

    Examples:
        >>> report = stability_check(System1Params(C=34.0))
        >>> report.stable
        True
        >>> round(report.max_real_part, 6)
        -0.2625

    """
    eigenvalues = np.linalg.eigvals(drift_matrix(p))
    max_real_part = float(np.max(eigenvalues.real))
    stable = max_real_part < -config.STABILITY_TOLERANCE
    return StabilityReport(stable=stable, max_real_part=max_real_part)


def steady_state_cm(p: System1Params) -> CovarianceMatrix:
    r"""Steady-state covariance matrix of mirrors and optics.

    Solves :math:`AV + VA^T = -D`
    with :func:`optowork.drift_matrix`
    and :func:`optowork.noise_matrix`.

    Args:
        p: system parameters

    Returns:
        covariance matrix of four modes
        ordered as mirror 1, mirror 2, optic 1, optic 2

    Raises:
        UnstableSystem: if the drift matrix is not stable
        SingularSystem: if the Lyapunov system cannot be solved

    Examples:
        >>> V = steady_state_cm(System1Params(C=34.0))
        >>> bool(np.allclose(V, np.eye(8) / 2))
        True

    """
    report = stability_check(p)
    if not report.stable:
        raise UnstableSystem(
            f"Drift matrix is unstable, "
            f"largest real part of its spectrum is {report.max_real_part}."
        )
    return solve_lyapunov(drift_matrix(p), noise_matrix(p))


def subsystem_cm(
    V: CovarianceMatrix,
    subsystem: str,
) -> CovarianceMatrix:
    r"""Reduce steady state to the mirror or the optic pair.

    Args:
        V: steady state covariance matrix
        subsystem: ``'mirror'`` or ``'optic'``

    Returns:
        two-mode covariance matrix

    Raises:
        ValueError: if subsystem is unknown

    """
    if subsystem == define.Subsystem.MIRROR:
        return reduce(V, define.SYSTEM1_MIRROR_MODES)
    if subsystem == define.Subsystem.OPTIC:
        return reduce(V, define.SYSTEM1_OPTIC_MODES)
    raise ValueError(
        f"Invalid subsystem '{subsystem}', expected one of {define.SUBSYSTEMS}."
    )


def _checked(
    value: float,
    description: str,
    interval: str,
    unit: str,
) -> float:
    param = Parameter(
        value_type=float,
        description=description,
        value=value,
        interval=interval,
        unit=unit,
    )
    return param.value
