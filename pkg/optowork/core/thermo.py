import math
import typing

import numpy as np

import audobject

from optowork.core import define
from optowork.core.config import config
from optowork.core.errors import DomainError
from optowork.core.errors import MaxWorkUndefined
from optowork.core.gaussian import TwoModeStandardForm
from optowork.core.gaussian import check_standard_form
from optowork.core.gaussian import direct_sum
from optowork.core.utils import check_finite


class MeasurementSpec(audobject.Object):
    r"""Gaussian measurement on the partner mode.

    Args:
        kind: :attr:`optowork.define.MeasurementKind.HOMODYNE`
            or :attr:`optowork.define.MeasurementKind.HETERODYNE`
        angle: rotation :math:`\varsigma` of the detector covariance
            in radians

    Raises:
        ValueError: if ``kind`` is unknown
            or ``angle`` is not finite

    Examples:
        >>> m = MeasurementSpec(define.MeasurementKind.HETERODYNE)
        >>> m.to_dict(include_version=False)
        {'$optowork.core.thermo.MeasurementSpec': {'kind': 1, 'angle': 0.0}}

    """

    def __init__(
        self,
        kind: int,
        *,
        angle: float = 0.0,
    ):
        _check_kind(kind)
        _check_angle(angle, "angle")
        self.kind = kind
        self.angle = float(angle)


class DoubleMeasurementSpec(audobject.Object):
    r"""Simultaneous Gaussian measurements on both modes.

    Both modes are measured with the same kind.
    The angles rotate the measured quadrature
    of mode A (``theta``) and mode B (``phi``).
    The default angles satisfy
    :math:`2(\theta + \phi) = \pi / 3`.

    Args:
        kind: measurement kind used on both modes
        theta: angle of mode A in radians
        phi: angle of mode B in radians

    Raises:
        ValueError: if ``kind`` is unknown
            or an angle is not finite

    """

    def __init__(
        self,
        kind: int,
        *,
        theta: float = define.DEFAULT_THETA,
        phi: float = define.DEFAULT_PHI,
    ):
        _check_kind(kind)
        _check_angle(theta, "theta")
        _check_angle(phi, "phi")
        self.kind = kind
        self.theta = float(theta)
        self.phi = float(phi)

    @property
    def kinds(self) -> typing.Tuple[int, int]:
        r"""Measurement kinds of mode A and mode B."""
        return self.kind, self.kind


class WorkReport(typing.NamedTuple):
    r"""Work extractable from a two-mode state.

    All work values share the unit of the report,
    :math:`k_B T` unless an absolute scale was requested.

    """

    w: float
    r"""Extractable work"""
    w_sep: float
    r"""Largest work extractable from a separable state
    with the same local variances"""
    w_max: typing.Optional[float]
    r"""Maximum work,
    ``None`` where undefined"""
    entangled_witness: bool
    r"""``True`` if work exceeds the separable bound"""
    verdict: str
    r"""One of :class:`optowork.define.Verdict`"""


def conditional_cm(
    f: TwoModeStandardForm,
    m: MeasurementSpec,
) -> np.ndarray:
    r"""Covariance matrix of mode A after measuring mode B.

    .. math::

        X_a - Z_{ab} (Y_b + C^{N_b})^{-1} Z_{ab}^T

    with :math:`X_a = x \mathbb{1}`,
    :math:`Y_b = y \mathbb{1}`,
    and :math:`Z_{ab} = \mathrm{diag}(z, -z)`.
    Heterodyne detection uses :math:`C^{N_b} = \mathbb{1} / 2`.
    For homodyne detection the inverse is replaced
    by its infinitely squeezed limit,
    the Moore-Penrose inverse of :math:`Y_b`
    projected on the measured quadrature.

    Args:
        f: standard form of modes A and B
        m: measurement on mode B

    Returns:
        conditional 2x2 covariance matrix of mode A

    Raises:
        DomainError: if :math:`y \le 0`

    Examples:
        >>> f = TwoModeStandardForm(2.0, 2.0, 1.0)
        >>> homodyne = MeasurementSpec(define.MeasurementKind.HOMODYNE)
        >>> conditional_cm(f, homodyne).round(12).tolist()
        [[1.5, 0.0], [0.0, 2.0]]
        >>> heterodyne = MeasurementSpec(define.MeasurementKind.HETERODYNE)
        >>> conditional_cm(f, heterodyne).round(12).tolist()
        [[1.6, 0.0], [0.0, 1.6]]

    """
    x, y, z = f
    if not y > 0:
        raise DomainError(f"Variance y={y} of the measured mode must be positive.")
    Xa = x * np.eye(2)
    Yb = y * np.eye(2)
    Zab = np.diag([z, -z])
    if m.kind == define.MeasurementKind.HETERODYNE:
        gain = np.linalg.inv(Yb + detector_cm(m))
    else:
        rotation = _rotation(m.angle)
        projector = rotation @ np.diag([1.0, 0.0]) @ rotation.T
        gain = np.linalg.pinv(projector @ Yb @ projector)
    return Xa - Zab @ gain @ Zab.T


def detector_cm(
    m: MeasurementSpec,
    *,
    squeezing: float = None,
) -> np.ndarray:
    r"""Covariance matrix of the detector mode.

    .. math::

        C^{N_b} = R(\varsigma)
        \,\mathrm{diag}(\upsilon, 1 / \upsilon)\,
        R(\varsigma)^T / 2

    Homodyne detection corresponds to :math:`\upsilon \to 0`
    and has no finite matrix.
    A finite ``squeezing`` approximates it,
    which converges to the limit
    used by :func:`optowork.conditional_cm`.

    Args:
        m: measurement
        squeezing: detector squeezing :math:`\upsilon`,
            if ``None`` the value of the measurement kind is used

    Returns:
        2x2 detector covariance matrix

    Raises:
        DomainError: if the squeezing is not positive

    Examples:
        >>> detector_cm(MeasurementSpec(define.MeasurementKind.HETERODYNE)).tolist()
        [[0.5, 0.0], [0.0, 0.5]]

    """  # noqa: E501
    upsilon = m.kind if squeezing is None else squeezing
    if not upsilon > 0:
        raise DomainError(
            f"Detector squeezing {upsilon} must be positive, "
            "homodyne detection has no finite detector covariance."
        )
    rotation = _rotation(m.angle)
    return (
        rotation
        @ np.diag([upsilon, 1 / upsilon])
        @ rotation.T
        * define.VACUUM_VARIANCE
    )


def outcome_mutual_information(
    f: TwoModeStandardForm,
    d: DoubleMeasurementSpec,
) -> float:
    r"""Mutual information of the outcomes of a double measurement.

    For heterodyne detection on both modes

    .. math::

        I = \frac{1}{2} \ln
        \frac{\det(X_a + C^{N_a}) \det(Y_b + C^{N_b})}
             {\det(V_{AB} + C^{N_a} \oplus C^{N_b})}

    For homodyne detection the measured quadratures
    at angles :math:`\theta` and :math:`\phi`
    are correlated Gaussian variables
    and the information follows from their covariance.

    Args:
        f: standard form of modes A and B
        d: double measurement

    Returns:
        mutual information in nats

    Raises:
        DomainError: if state is not physical

    Examples:
        >>> f = TwoModeStandardForm(1.0, 1.0, 0.0)
        >>> d = DoubleMeasurementSpec(define.MeasurementKind.HETERODYNE)
        >>> round(outcome_mutual_information(f, d), 12)
        0.0

    """
    check_standard_form(f)
    V = f.matrix()
    if d.kind == define.MeasurementKind.HETERODYNE:
        C = np.eye(2) * define.VACUUM_VARIANCE
        _, logdet_a = np.linalg.slogdet(V[:2, :2] + C)
        _, logdet_b = np.linalg.slogdet(V[2:, 2:] + C)
        _, logdet_ab = np.linalg.slogdet(V + direct_sum(C, C))
        information = 0.5 * (logdet_a + logdet_b - logdet_ab)
    else:
        projection = np.zeros((2, 4))
        projection[0, :2] = [math.cos(d.theta), math.sin(d.theta)]
        projection[1, 2:] = [math.cos(d.phi), math.sin(d.phi)]
        S = projection @ V @ projection.T
        information = 0.5 * math.log(S[0, 0] * S[1, 1] / np.linalg.det(S))
    return max(0.0, float(information))


def work_double(
    f: TwoModeStandardForm,
    d: DoubleMeasurementSpec,
) -> float:
    r"""Work extractable after measuring both modes.

    .. math::

        \mathcal{W}^{(0,0)} &= \frac{1}{2}
            \ln\frac{4xy}{4xy - 2z^2[1 + 2\cos(2\theta + 2\phi)]} \\
        \mathcal{W}^{(1,1)} &=
            \ln\frac{(1 + 2x)(1 + 2y)}{1 + 2y + x(2 + 4y) - 4z^2}

    The angles only enter for homodyne detection.

    Args:
        f: standard form of modes A and B
        d: double measurement

    Returns:
        work in units of :math:`k_B T`

    Raises:
        DomainError: if state is not physical
            or angles are incompatible with the state

    Examples:
        >>> f = TwoModeStandardForm(2.0, 2.0, 1.0)
        >>> d = DoubleMeasurementSpec(define.MeasurementKind.HOMODYNE)
        >>> round(work_double(f, d), 12) == round(
        ...     work_single(f, define.MeasurementKind.HOMODYNE), 12
        ... )
        True

    """
    check_standard_form(f)
    x, y, z = f
    if d.kind == define.MeasurementKind.HOMODYNE:
        bracket = 1 + 2 * math.cos(2 * d.theta + 2 * d.phi)
        numerator = 4 * x * y
        denominator = numerator - 2 * z**2 * bracket
        factor = 0.5
    else:
        numerator = (1 + 2 * x) * (1 + 2 * y)
        denominator = 1 + 2 * y + x * (2 + 4 * y) - 4 * z**2
        factor = 1.0
    if not denominator > 0:
        raise DomainError(
            f"Measurement angles theta={d.theta} and phi={d.phi} "
            f"give a nonpositive denominator for standard form {tuple(f)}."
        )
    return factor * math.log(numerator / denominator)


def work_max(
    x: float,
    y: float,
    kind: int,
) -> float:
    r"""Maximum extractable work for given local variances.

    .. math::

        \mathcal{W}^{(0)}_\text{Max} &=
            \frac{1}{2}\ln\frac{4xy}{1 - 2|x - y|} \\
        \mathcal{W}^{(1)}_\text{Max} &=
        \begin{cases}
            \frac{1}{2}\ln 2x & x \le y \\
            \ln\frac{2x(2y + 1)}{4x - 2y + 1} & x > y
        \end{cases}

    The heterodyne branches are discontinuous at :math:`x = y`
    and are applied as given.

    Args:
        x: variance of mode A
        y: variance of mode B
        kind: measurement kind

    Returns:
        work in units of :math:`k_B T`

    Raises:
        DomainError: if a variance is below the vacuum
        MaxWorkUndefined: if :math:`|x - y| \ge 1/2` for homodyne
            or :math:`4x - 2y + 1 \le 0` for heterodyne

    Examples:
        >>> work_max(0.5, 0.5, define.MeasurementKind.HOMODYNE)
        0.0
        >>> round(work_max(1.0, 1.0, define.MeasurementKind.HETERODYNE), 12)
        0.34657359028

    """
    _check_kind(kind)
    _check_variances(x, y)
    if kind == define.MeasurementKind.HOMODYNE:
        denominator = 1 - 2 * abs(x - y)
        if not denominator > 0:
            raise MaxWorkUndefined(
                f"Maximum homodyne work is undefined for |x - y| >= 1/2, "
                f"got x={x} and y={y}."
            )
        return 0.5 * math.log(4 * x * y / denominator)
    if x <= y:
        return 0.5 * math.log(2 * x)
    denominator = 4 * x - 2 * y + 1
    if not denominator > 0:
        raise MaxWorkUndefined(
            f"Maximum heterodyne work is undefined for 4x - 2y + 1 <= 0, "
            f"got x={x} and y={y}."
        )
    return math.log(2 * x * (2 * y + 1) / denominator)


def work_report(
    f: TwoModeStandardForm,
    kind: int,
    *,
    kbt: float = None,
) -> WorkReport:
    r"""Extractable work with its bounds and the entanglement verdict.

    Work exceeding the separable bound witnesses entanglement.
    Differences smaller than
    :attr:`optowork.config.WITNESS_TOLERANCE`
    are reported as
    :attr:`optowork.define.Verdict.INCONCLUSIVE`.

    Args:
        f: standard form of modes A and B
        kind: measurement kind
        kbt: if given,
            all work values are multiplied by this thermal energy

    Returns:
        work report

    Raises:
        DomainError: if state is not physical
            or ``kbt`` is not positive

    Examples:
        >>> report = work_report(
        ...     TwoModeStandardForm(0.5, 0.5, 0.0),
        ...     define.MeasurementKind.HOMODYNE,
        ... )
        >>> report.w, report.w_sep, report.w_max
        (0.0, 0.0, 0.0)
        >>> report.verdict
        'inconclusive'

    """
    if kbt is not None:
        check_finite(kbt, "kbt", DomainError)
        if not kbt > 0:
            raise DomainError(f"Thermal energy kbt={kbt} must be positive.")
    x, y, _ = f
    w = work_single(f, kind)
    w_sep = work_separable_bound(x, y, kind)
    try:
        w_max = work_max(x, y, kind)
    except MaxWorkUndefined:
        w_max = None

    difference = w - w_sep
    if abs(difference) < config.WITNESS_TOLERANCE:
        verdict = define.Verdict.INCONCLUSIVE
    elif difference > 0:
        verdict = define.Verdict.ENTANGLED
    else:
        verdict = define.Verdict.SEPARABLE

    if kbt is not None:
        w *= kbt
        w_sep *= kbt
        if w_max is not None:
            w_max *= kbt

    return WorkReport(
        w=w,
        w_sep=w_sep,
        w_max=w_max,
        entangled_witness=verdict == define.Verdict.ENTANGLED,
        verdict=verdict,
    )


def work_separable_bound(
    x: float,
    y: float,
    kind: int,
) -> float:
    r"""Largest work extractable from a separable state.

    .. math::

        \mathcal{W}^{(0)}_\text{Sep} &=
            \frac{1}{2}\ln\frac{4xy}{2x + 2y - 1} \\
        \mathcal{W}^{(1)}_\text{Sep} &=
            \ln\frac{2x(2y + 1)}{4x + 2y - 1}

    Both equal :func:`optowork.work_single`
    at the largest separable correlation
    :math:`z^2 = (x - 1/2)(y - 1/2)`.

    Args:
        x: variance of mode A
        y: variance of mode B
        kind: measurement kind

    Returns:
        work in units of :math:`k_B T`

    Raises:
        DomainError: if a variance is below the vacuum

    Examples:
        >>> work_separable_bound(0.5, 0.5, define.MeasurementKind.HETERODYNE)
        0.0

    """
    _check_kind(kind)
    _check_variances(x, y)
    if kind == define.MeasurementKind.HOMODYNE:
        value = 0.5 * math.log(4 * x * y / (2 * x + 2 * y - 1))
    else:
        value = math.log(2 * x * (2 * y + 1) / (4 * x + 2 * y - 1))
    return max(0.0, value)


def work_single(
    f: TwoModeStandardForm,
    kind: int,
) -> float:
    r"""Work extractable from mode A after measuring mode B.

    .. math::

        \mathcal{W}^{(0)} &= \frac{1}{2}\ln\frac{xy}{xy - z^2} \\
        \mathcal{W}^{(1)} &= \ln\frac{2xy + x}{2xy + x - 2z^2}

    Both equal :math:`\frac{1}{2}\ln(\det X_a / \det \sigma_a)`
    with the conditional covariance matrix :math:`\sigma_a`
    of :func:`optowork.conditional_cm`.

    Args:
        f: standard form of modes A and B
        kind: measurement kind

    Returns:
        work in units of :math:`k_B T`

    Raises:
        DomainError: if state is not physical

    Examples:
        >>> f = TwoModeStandardForm(1.0, 1.0, 0.0)
        >>> work_single(f, define.MeasurementKind.HOMODYNE)
        0.0
        >>> f = TwoModeStandardForm(2.0, 2.0, 1.0)
        >>> round(work_single(f, define.MeasurementKind.HOMODYNE), 12)
        0.143841036226

    """
    _check_kind(kind)
    check_standard_form(f)
    x, y, z = f
    if kind == define.MeasurementKind.HOMODYNE:
        return 0.5 * math.log1p(z**2 / (x * y - z**2))
    denominator = 2 * x * y + x - 2 * z**2
    if not denominator > 0:
        raise DomainError(f"Standard form {tuple(f)} gives a nonpositive denominator.")
    return math.log1p(2 * z**2 / denominator)


def _check_angle(value: float, name: str):
    if not math.isfinite(value):
        raise ValueError(f"Angle {name}={value} must be finite.")


def _check_kind(kind: int):
    if kind not in define.MEASUREMENT_KINDS:
        raise ValueError(
            f"Invalid measurement kind '{kind}', "
            f"expected one of {list(define.MEASUREMENT_KINDS)}."
        )


def _check_variances(x: float, y: float):
    lower = define.VACUUM_VARIANCE - config.PHYSICALITY_TOLERANCE
    if not (x >= lower and y >= lower):
        raise DomainError(
            f"Variances x={x} and y={y} must not be smaller "
            f"than the vacuum variance {define.VACUUM_VARIANCE}."
        )


def _rotation(angle: float) -> np.ndarray:
    c = math.cos(angle)
    s = math.sin(angle)
    return np.array([[c, -s], [s, c]])
