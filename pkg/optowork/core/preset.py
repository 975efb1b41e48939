import math
import typing

from optowork.core import define
from optowork.core.config import config
from optowork.core.errors import UnknownPreset
from optowork.core.sweep import Dataset
from optowork.core.sweep import SweepConfig
from optowork.core.sweep import sweep


_Q = define.Quantity

_SINGLE_WORK = [
    _Q.W0,
    _Q.W0_SEP,
    _Q.W0_MAX,
    _Q.W1,
    _Q.W1_SEP,
    _Q.W1_MAX,
]
_DOUBLE_WORK = [
    _Q.W0,
    _Q.W1,
    _Q.W00,
    _Q.W11,
]
_CAVITY = {
    "kappa": 1.0,
    "gamma": 0.05,
}

# Arguments of SweepConfig without the number of points,
# 'stop' is the upper end of the swept range.
_PRESETS = {
    "fig3": {
        "description": (
            "Mirror-mirror entanglement and work versus thermal phonon number "
            "for several squeezing parameters, C=34, gamma/kappa=0.05."
        ),
        "system": 1,
        "swept_parameter": "n_th",
        "start": 0.0,
        "stop": 5.0,
        "fixed_parameters": {**_CAVITY, "C": 34.0},
        "family_parameter": "r",
        "family_values": [0.5, 1.0, 1.5, 2.0],
        "subsystem": define.Subsystem.MIRROR,
        "quantities": [_Q.L_N_MIRROR] + _SINGLE_WORK,
    },
    "fig4": {
        "description": (
            "Mirror-mirror entanglement and work versus cooperativity "
            "for n_th=1 and n_th=2, r=1.5, gamma/kappa=0.05."
        ),
        "system": 1,
        "swept_parameter": "C",
        "start": 0.0,
        "stop": 100.0,
        "fixed_parameters": {**_CAVITY, "r": 1.5},
        "family_parameter": "n_th",
        "family_values": [1.0, 2.0],
        "subsystem": define.Subsystem.MIRROR,
        "quantities": [_Q.L_N_MIRROR] + _SINGLE_WORK,
    },
    "fig5": {
        "description": (
            "Optic-optic entanglement and work versus thermal phonon number "
            "for several squeezing parameters, C=34, gamma/kappa=0.05."
        ),
        "system": 1,
        "swept_parameter": "n_th",
        "start": 0.0,
        "stop": 5.0,
        "fixed_parameters": {**_CAVITY, "C": 34.0},
        "family_parameter": "r",
        "family_values": [0.5, 1.0, 1.5, 2.0],
        "subsystem": define.Subsystem.OPTIC,
        "quantities": [_Q.L_N_OPTIC] + _SINGLE_WORK,
    },
    "fig7": {
        "description": (
            "Mirror-mirror single and double measurement work "
            "versus thermal phonon number for r=1 and r=2, C=34."
        ),
        "system": 1,
        "swept_parameter": "n_th",
        "start": 0.0,
        "stop": 5.0,
        "fixed_parameters": {**_CAVITY, "C": 34.0},
        "family_parameter": "r",
        "family_values": [1.0, 2.0],
        "subsystem": define.Subsystem.MIRROR,
        "quantities": _DOUBLE_WORK,
    },
    "fig8": {
        "description": (
            "Mirror-mirror single and double measurement work "
            "versus cooperativity for n_th=1 and n_th=2, r=1.5."
        ),
        "system": 1,
        "swept_parameter": "C",
        "start": 0.0,
        "stop": 100.0,
        "fixed_parameters": {**_CAVITY, "r": 1.5},
        "family_parameter": "n_th",
        "family_values": [1.0, 2.0],
        "subsystem": define.Subsystem.MIRROR,
        "quantities": _DOUBLE_WORK,
    },
    "fig9": {
        "description": (
            "Optic-optic single and double measurement work "
            "versus thermal phonon number for r=1 and r=2, C=34."
        ),
        "system": 1,
        "swept_parameter": "n_th",
        "start": 0.0,
        "stop": 5.0,
        "fixed_parameters": {**_CAVITY, "C": 34.0},
        "family_parameter": "r",
        "family_values": [1.0, 2.0],
        "subsystem": define.Subsystem.OPTIC,
        "quantities": _DOUBLE_WORK,
    },
    "fig10": {
        "description": (
            "Optic-optic entanglement and work of the single-mirror system "
            "versus time for several coupling ratios."
        ),
        "system": 2,
        "swept_parameter": "omega_t",
        "start": 0.0,
        "stop": 4 * math.pi,
        "fixed_parameters": {},
        "family_parameter": "x",
        "family_values": [1.5, 2.5],
        "subsystem": define.Subsystem.OPTIC,
        "quantities": [_Q.L_N_OPTIC] + _SINGLE_WORK,
    },
    "fig11": {
        "description": (
            "Optic-optic single and double measurement work "
            "of the single-mirror system versus time for x=1.5 and x=2.5."
        ),
        "system": 2,
        "swept_parameter": "omega_t",
        "start": 0.0,
        "stop": 4 * math.pi,
        "fixed_parameters": {},
        "family_parameter": "x",
        "family_values": [1.5, 2.5],
        "subsystem": define.Subsystem.OPTIC,
        "quantities": _DOUBLE_WORK,
    },
}

ALIASES = {
    "fig6": "fig5",
    "mirror-bath": "fig3",
    "mirror-coop": "fig4",
    "optic-bath": "fig5",
    "mirror-double": "fig7",
    "mirror-double-coop": "fig8",
    "optic-double": "fig9",
    "dynamic": "fig10",
    "dynamic-double": "fig11",
}
r"""Alternative names of figure presets."""


def available_presets() -> typing.Dict[str, str]:
    r"""Identifiers and descriptions of figure presets.

    Returns:
        dictionary with description per preset

    Examples:
        >>> list(available_presets())
        ['fig3', 'fig4', 'fig5', 'fig7', 'fig8', 'fig9', 'fig10', 'fig11']

    """
    return {name: preset["description"] for name, preset in _PRESETS.items()}


def preset_config(
    id: str,
    *,
    points: int = None,
    kbt: float = None,
) -> SweepConfig:
    r"""Sweep configuration of a figure preset.

    Args:
        id: preset identifier or alias,
            see :func:`optowork.available_presets`
            and :data:`optowork.ALIASES`
        points: number of points per sweep,
            if ``None``
            :attr:`optowork.config.DEFAULT_POINTS` is used
        kbt: if given,
            work columns are multiplied by this thermal energy

    Returns:
        sweep configuration

    Raises:
        UnknownPreset: if ``id`` is not known
        ConfigError: if ``points`` or ``kbt`` is invalid

    Examples:
        >>> c = preset_config("fig6", points=11)
        >>> c.subsystem, c.family_values
        ('optic', [0.5, 1.0, 1.5, 2.0])

    """
    name = ALIASES.get(id, id)
    if name not in _PRESETS:
        raise UnknownPreset(
            f"Unknown preset '{id}', "
            f"expected one of {list(_PRESETS) + list(ALIASES)}."
        )
    if points is None:
        points = config.DEFAULT_POINTS
    preset = dict(_PRESETS[name])
    start = preset.pop("start")
    stop = preset.pop("stop")
    return SweepConfig(
        swept_range=[start, stop, points],
        kbt=kbt,
        **preset,
    )


def run_figure_preset(
    id: str,
    *,
    points: int = None,
    kbt: float = None,
    num_workers: int = None,
) -> Dataset:
    r"""Evaluate the sweep of a figure preset.

    The provenance record of the dataset
    additionally holds the requested preset identifier.

    Args:
        id: preset identifier or alias
        points: number of points per sweep
        kbt: if given,
            work columns are multiplied by this thermal energy
        num_workers: number of threads

    Returns:
        dataset

    Raises:
        UnknownPreset: if ``id`` is not known

    Examples:
        >>> d = run_figure_preset("fig11", points=3)
        >>> d.columns
        ['x', 'omega_t', 'W0', 'W1', 'W00', 'W11']
        >>> len(d)
        6

    """
    c = preset_config(id, points=points, kbt=kbt)
    d = sweep(c, num_workers=num_workers)
    d.provenance["preset"] = id
    return d
