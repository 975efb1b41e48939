import math


VACUUM_VARIANCE = 0.5
r"""Quadrature variance of the vacuum."""

DEFAULT_THETA = math.pi / 6
DEFAULT_PHI = 0.0

CSV_EMPTY = ""
META_SUFFIX = ".meta.json"
SWEEP_COLUMN_SEPARATOR = "="


class MeasurementKind:
    r"""Gaussian measurement performed on a mode.

    The value equals the detector squeezing :math:`\upsilon`
    of the measurement covariance.

    """

    HOMODYNE = 0
    r"""infinitely squeezed detector"""
    HETERODYNE = 1
    r"""vacuum detector"""


MEASUREMENT_KINDS = (
    MeasurementKind.HOMODYNE,
    MeasurementKind.HETERODYNE,
)


class Mode:
    r"""Mode indices of the two systems.

    System 1 orders its modes as
    mirror 1, mirror 2, optic 1, optic 2.
    System 2 orders its modes as
    optic 1, optic 2, mirror.

    """

    SYSTEM1_MIRROR_1 = 0
    SYSTEM1_MIRROR_2 = 1
    SYSTEM1_OPTIC_1 = 2
    SYSTEM1_OPTIC_2 = 3

    SYSTEM2_OPTIC_1 = 0
    SYSTEM2_OPTIC_2 = 1
    SYSTEM2_MIRROR = 2


SYSTEM1_MIRROR_MODES = [Mode.SYSTEM1_MIRROR_1, Mode.SYSTEM1_MIRROR_2]
SYSTEM1_OPTIC_MODES = [Mode.SYSTEM1_OPTIC_1, Mode.SYSTEM1_OPTIC_2]
SYSTEM2_OPTIC_MODES = [Mode.SYSTEM2_OPTIC_1, Mode.SYSTEM2_OPTIC_2]


class Subsystem:
    r"""Two-mode subsystem of system 1."""

    MIRROR = "mirror"
    r"""mirror 1 and mirror 2"""
    OPTIC = "optic"
    r"""optic 1 and optic 2"""


SUBSYSTEMS = (Subsystem.MIRROR, Subsystem.OPTIC)


class Quantity:
    r"""Names of quantities that can be requested in a sweep."""

    L_N_MIRROR = "L_N_mirror"
    L_N_OPTIC = "L_N_optic"
    W0 = "W0"
    W1 = "W1"
    W0_SEP = "W0_sep"
    W1_SEP = "W1_sep"
    W0_MAX = "W0_max"
    W1_MAX = "W1_max"
    W00 = "W00"
    W11 = "W11"


QUANTITIES = (
    Quantity.L_N_MIRROR,
    Quantity.L_N_OPTIC,
    Quantity.W0,
    Quantity.W1,
    Quantity.W0_SEP,
    Quantity.W1_SEP,
    Quantity.W0_MAX,
    Quantity.W1_MAX,
    Quantity.W00,
    Quantity.W11,
)

WORK_QUANTITIES = QUANTITIES[2:]


class Verdict:
    r"""Outcome of the work-based entanglement witness."""

    ENTANGLED = "entangled"
    r"""extractable work exceeds the separable bound"""
    SEPARABLE = "separable"
    r"""extractable work below the separable bound"""
    INCONCLUSIVE = "inconclusive"
    r"""extractable work equals the separable bound within tolerance"""


class ExitCode:
    r"""Exit codes of the command line interface."""

    SUCCESS = 0
    CONFIG_ERROR = 1
    DOMAIN_ERROR = 2
    IO_ERROR = 3
    CHECK_FAILED = 4
