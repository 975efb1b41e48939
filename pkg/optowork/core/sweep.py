import json
import os
import typing
import warnings

import numpy as np
import pandas as pd

import audeer
import audobject

from optowork.core import define
from optowork.core.config import config
from optowork.core.errors import ConfigError
from optowork.core.errors import DomainError
from optowork.core.errors import IoError
from optowork.core.errors import MaxWorkUndefined
from optowork.core.gaussian import TwoModeStandardForm
from optowork.core.gaussian import logarithmic_negativity
from optowork.core.gaussian import standard_form
from optowork.core.parameter import Parameters
from optowork.core.parameter import system1_parameters
from optowork.core.parameter import system2_parameters
from optowork.core.system1 import System1Params
from optowork.core.system1 import steady_state_cm
from optowork.core.system1 import subsystem_cm
from optowork.core.system2 import System2Params
from optowork.core.system2 import optic_optic_cm
from optowork.core.thermo import DoubleMeasurementSpec
from optowork.core.thermo import work_double
from optowork.core.thermo import work_max
from optowork.core.thermo import work_separable_bound
from optowork.core.thermo import work_single
from optowork.core.utils import check_finite
from optowork.core.utils import get_version
from optowork.core.utils import parse_range
from optowork.core.utils import utc_timestamp


SYSTEMS = (1, 2)


class SweepConfig(audobject.Object):
    r"""Configuration of a parameter sweep.

    One parameter is swept over an inclusive, equidistant grid
    while the remaining parameters of the system
    keep their default or fixed values.
    An optional family parameter repeats the sweep
    for several values,
    the repetitions are concatenated row-wise.

    Args:
        system: 1 for the two-cavity system,
            2 for the single-mirror system
        swept_parameter: name of swept parameter
        swept_range: start, stop and number of points
        fixed_parameters: values of further parameters
        quantities: names of the evaluated quantities,
            see :class:`optowork.define.Quantity`.
            If ``None``,
            all quantities of the system are evaluated
        subsystem: mode pair on which work is evaluated,
            ``'mirror'`` or ``'optic'`` for system 1,
            only ``'optic'`` for system 2.
            If ``None``,
            ``'mirror'`` for system 1 and ``'optic'`` for system 2
        family_parameter: name of parameter
            for which the sweep is repeated
        family_values: values of the family parameter
        theta: angle of mode A for double homodyne detection
        phi: angle of mode B for double homodyne detection
        kbt: if given,
            work columns are multiplied by this thermal energy
        description: free text stored with the results
        approximated: ``True`` if parameter values
            were estimated rather than given exactly
        output_path: default path of the CSV file

    Raises:
        ConfigError: if the configuration is invalid

    Examples:
        >>> c = SweepConfig(
        ...     system=1,
        ...     swept_parameter="n_th",
        ...     swept_range=[0.0, 5.0, 11],
        ...     fixed_parameters={"C": 34.0, "r": 1.0},
        ...     quantities=["L_N_optic"],
        ... )
        >>> c.grid().tolist()[:3]
        [0.0, 0.5, 1.0]

    """

    def __init__(
        self,
        *,
        system: int = 1,
        swept_parameter: str = "n_th",
        swept_range: typing.Sequence = (0.0, 5.0, config.DEFAULT_POINTS),
        fixed_parameters: typing.Dict[str, float] = None,
        quantities: typing.Sequence[str] = None,
        subsystem: str = None,
        family_parameter: str = None,
        family_values: typing.Sequence[float] = None,
        theta: float = define.DEFAULT_THETA,
        phi: float = define.DEFAULT_PHI,
        kbt: float = None,
        description: str = "",
        approximated: bool = False,
        output_path: str = None,
    ):
        if system not in SYSTEMS:
            raise ConfigError(f"Invalid system '{system}', expected one of {SYSTEMS}.")
        self.system = system
        r"""System number"""

        names = list(_parameters(system).keys())
        if swept_parameter not in names:
            raise ConfigError(
                f"Invalid swept parameter '{swept_parameter}' "
                f"for system {system}, expected one of {names}."
            )
        self.swept_parameter = swept_parameter
        r"""Name of swept parameter"""

        self.swept_range = _check_range(swept_range, swept_parameter, system)
        r"""Start, stop and number of points"""

        fixed_parameters = dict(fixed_parameters or {})
        for name, value in fixed_parameters.items():
            if name == swept_parameter or name == family_parameter:
                raise ConfigError(
                    f"Parameter '{name}' cannot be fixed and varied at the same time."
                )
            fixed_parameters[name] = _check_value(name, value, system)
        self.fixed_parameters = fixed_parameters
        r"""Values of fixed parameters"""

        self.quantities = _check_quantities(quantities, system)
        r"""Names of evaluated quantities"""

        self.subsystem = _check_subsystem(subsystem, system)
        r"""Mode pair on which work is evaluated"""

        if (family_parameter is None) != (family_values is None):
            raise ConfigError(
                "'family_parameter' and 'family_values' have to be given together."
            )
        if family_parameter is not None:
            if family_parameter not in names or family_parameter == swept_parameter:
                raise ConfigError(
                    f"Invalid family parameter '{family_parameter}' "
                    f"for system {system} and swept parameter '{swept_parameter}'."
                )
            family_values = [
                _check_value(family_parameter, value, system) for value in family_values
            ]
            if not family_values:
                raise ConfigError("At least one family value has to be given.")
        self.family_parameter = family_parameter
        r"""Name of family parameter"""
        self.family_values = family_values
        r"""Values of family parameter"""

        for name, value in [("theta", theta), ("phi", phi)]:
            check_finite(value, name, ConfigError)
        self.theta = float(theta)
        r"""Angle of mode A for double homodyne detection"""
        self.phi = float(phi)
        r"""Angle of mode B for double homodyne detection"""

        if kbt is not None:
            check_finite(kbt, "kbt", ConfigError)
            if not kbt > 0:
                raise ConfigError(f"Thermal energy kbt={kbt} must be positive.")
            kbt = float(kbt)
        self.kbt = kbt
        r"""Scale of work columns"""

        self.description = description
        r"""Description"""
        self.approximated = approximated
        r"""Parameter values are estimates"""
        self.output_path = output_path
        r"""Default path of CSV file"""

    @property
    def columns(self) -> typing.List[str]:
        r"""Column names of the resulting dataset."""
        columns = [self.swept_parameter] + self.quantities
        if self.family_parameter is not None:
            columns = [self.family_parameter] + columns
        return columns

    def grid(self) -> np.ndarray:
        r"""Values of the swept parameter in ascending order."""
        start, stop, count = self.swept_range
        return np.linspace(min(start, stop), max(start, stop), count)


class Dataset:
    r"""Table of sweep results with provenance record.

    Undefined values are stored as ``NaN``
    and written as empty cells.

    Args:
        data: table with one column per swept parameter and quantity
        provenance: record describing how the data was created

    """

    def __init__(
        self,
        data: pd.DataFrame,
        provenance: typing.Dict[str, typing.Any],
    ):
        self.data = data
        r"""Table of results"""
        self.provenance = provenance
        r"""Provenance record"""

    def __len__(self) -> int:  # noqa: D105
        return len(self.data)

    @property
    def columns(self) -> typing.List[str]:
        r"""Column names."""
        return list(self.data.columns)


def emit_csv(
    d: Dataset,
    path: str,
):
    r"""Write dataset to CSV and provenance to a JSON sidecar.

    Floats are written with 17 significant digits,
    undefined values as empty cells.
    The sidecar shares the stem of the CSV file
    and ends on ``.meta.json``.

    Args:
        d: dataset
        path: path to CSV file

    Raises:
        IoError: if a file cannot be written

    """
    path = audeer.safe_path(path)
    try:
        audeer.mkdir(os.path.dirname(path))
        d.data.to_csv(
            path,
            index=False,
            float_format="%.17g",
            na_rep=define.CSV_EMPTY,
            lineterminator="\n",
        )
        with open(metadata_path(path), "w") as fp:
            json.dump(d.provenance, fp, indent=2, sort_keys=True)
            fp.write("\n")
    except OSError as ex:
        raise IoError(f"Cannot write results to '{path}': {ex}") from ex


def evaluate_point(
    system: int,
    parameters: typing.Dict[str, float] = None,
    *,
    quantities: typing.Sequence[str] = None,
    subsystem: str = None,
    theta: float = define.DEFAULT_THETA,
    phi: float = define.DEFAULT_PHI,
    kbt: float = None,
) -> typing.Dict[str, typing.Optional[float]]:
    r"""Evaluate quantities at a single parameter point.

    Parameters not given keep their default values,
    see :func:`optowork.system1_parameters`
    and :func:`optowork.system2_parameters`.

    Args:
        system: 1 or 2
        parameters: parameter values
        quantities: names of evaluated quantities,
            if ``None`` all quantities of the system
        subsystem: mode pair on which work is evaluated
        theta: angle of mode A for double homodyne detection
        phi: angle of mode B for double homodyne detection
        kbt: if given,
            work values are multiplied by this thermal energy

    Returns:
        value per quantity,
        ``None`` where the quantity is undefined

    Raises:
        ConfigError: if a name is invalid
        DomainError: if the point is outside the physical domain
            or ``kbt`` is not a positive finite number
        ValueError: if a parameter value is out of range

    Examples:
        >>> values = evaluate_point(2, {"x": 1.5, "omega_t": 0.0})
        >>> values["L_N_optic"], values["W0"]
        (0.0, 0.0)

    """
    if kbt is not None:
        _check_kbt(kbt)
    if system not in SYSTEMS:
        raise ConfigError(f"Invalid system '{system}', expected one of {SYSTEMS}.")
    params = _parameters(system)
    for name, value in (parameters or {}).items():
        if name not in params.keys():
            raise ConfigError(
                f"Invalid parameter '{name}' for system {system}, "
                f"expected one of {list(params.keys())}."
            )
        params.__setattr__(name, value)
    return _evaluate(
        params(),
        system=system,
        quantities=_check_quantities(quantities, system),
        subsystem=_check_subsystem(subsystem, system),
        double_homodyne=DoubleMeasurementSpec(
            define.MeasurementKind.HOMODYNE,
            theta=theta,
            phi=phi,
        ),
        kbt=kbt,
    )


def metadata_path(path: str) -> str:
    r"""Path of the JSON sidecar that belongs to a CSV file."""
    root, _ = os.path.splitext(path)
    return root + define.META_SUFFIX


def parse_config_file(path: str) -> SweepConfig:
    r"""Read sweep configuration from file.

    Files ending on ``.yaml`` or ``.yml``
    hold a serialized :class:`optowork.SweepConfig`.
    Any other file is read as flat ``key = value`` text
    with one pair per line and ``#`` starting a comment.
    Keys are argument names of :class:`optowork.SweepConfig`,
    ranges are written as ``start:stop:count``,
    lists are comma separated,
    and fixed parameters are given as ``name=value`` pairs,
    e.g.

    .. code-block:: text

        system = 1
        swept_parameter = n_th
        swept_range = 0:5:201
        fixed_parameters = C=34, r=1.0
        quantities = L_N_optic, W0, W0_sep

    Args:
        path: path to configuration file

    Returns:
        sweep configuration

    Raises:
        ConfigError: if the file content is invalid
        IoError: if the file cannot be read

    """
    path = audeer.safe_path(path)
    if not os.path.isfile(path):
        raise IoError(f"Configuration file '{path}' does not exist.")

    if audeer.file_extension(path) in ["yaml", "yml"]:
        try:
            c = audobject.from_yaml(path)
        except OSError as ex:
            raise IoError(f"Cannot read '{path}': {ex}") from ex
        except Exception as ex:
            raise ConfigError(f"Invalid configuration in '{path}': {ex}") from ex
        if not isinstance(c, SweepConfig):
            raise ConfigError(
                f"File '{path}' holds '{type(c).__name__}', expected a SweepConfig."
            )
        return c

    try:
        with open(path) as fp:
            lines = fp.readlines()
    except OSError as ex:
        raise IoError(f"Cannot read '{path}': {ex}") from ex

    kwargs = {}
    for number, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, separator, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not separator or not key:
            raise ConfigError(
                f"Line {number} of '{path}' is not of the form 'key = value'."
            )
        if key not in _CONFIG_FIELDS:
            raise ConfigError(
                f"Unknown key '{key}' in line {number} of '{path}', "
                f"expected one of {sorted(_CONFIG_FIELDS)}."
            )
        if key in kwargs:
            raise ConfigError(f"Duplicate key '{key}' in line {number} of '{path}'.")
        try:
            kwargs[key] = _CONFIG_FIELDS[key](value)
        except ValueError as ex:
            raise ConfigError(
                f"Invalid value for '{key}' in line {number} of '{path}': {ex}"
            ) from ex

    try:
        return SweepConfig(**kwargs)
    except TypeError as ex:
        raise ConfigError(f"Invalid configuration in '{path}': {ex}") from ex


def sweep(
    c: SweepConfig,
    *,
    num_workers: int = None,
) -> Dataset:
    r"""Evaluate quantities over the grid of a sweep configuration.

    Rows are ordered by family value as configured
    and by the swept parameter in ascending order.
    Points are evaluated in parallel
    with ``num_workers`` threads,
    the row order does not depend on it.
    Undefined values,
    e.g. maximum work outside its domain,
    are stored as ``NaN``
    and a :class:`RuntimeWarning` is issued.
    A configuration flagged as approximated
    issues a :class:`RuntimeWarning` as well.

    Args:
        c: sweep configuration
        num_workers: number of threads,
            if ``None`` :attr:`optowork.config.NUM_WORKERS` is used

    Returns:
        dataset

    Raises:
        DomainError: if a point lies outside the physical domain,
            the message names the row
        ConfigError: if ``num_workers`` is smaller than 1

    Examples:
        >>> c = SweepConfig(
        ...     system=2,
        ...     swept_parameter="omega_t",
        ...     swept_range=[0.0, 3.0, 4],
        ...     quantities=["L_N_optic"],
        ... )
        >>> d = sweep(c)
        >>> d.columns
        ['omega_t', 'L_N_optic']
        >>> len(d)
        4

    """
    if c.approximated:
        warnings.warn(
            "Parameter values of this sweep are approximated, "
            "see 'description' of the configuration.",
            RuntimeWarning,
        )
    if num_workers is None:
        num_workers = config.NUM_WORKERS
    if not isinstance(num_workers, int) or num_workers < 1:
        raise ConfigError(
            f"Invalid number of workers {num_workers!r}, expected at least 1."
        )

    families = c.family_values if c.family_parameter is not None else [None]
    rows = []
    for family_value in families:
        for value in c.grid():
            values = dict(c.fixed_parameters)
            values[c.swept_parameter] = float(value)
            if c.family_parameter is not None:
                values[c.family_parameter] = family_value
            rows.append(values)

    params = [([c, index, values], {}) for index, values in enumerate(rows)]
    results = audeer.run_tasks(
        _evaluate_row,
        params,
        num_workers=num_workers,
        multiprocessing=False,
    )

    table = []
    for values, result in zip(rows, results):
        row = [values[c.swept_parameter]]
        if c.family_parameter is not None:
            row = [values[c.family_parameter]] + row
        row += [
            np.nan if result[name] is None else result[name] for name in c.quantities
        ]
        table.append(row)
    data = pd.DataFrame(table, columns=c.columns, dtype="float64")

    undefined = {
        name: int(data[name].isna().sum())
        for name in c.quantities
        if data[name].isna().any()
    }
    if undefined:
        warnings.warn(
            f"Undefined values are written as empty cells: {undefined}.",
            RuntimeWarning,
        )

    start, stop, count = c.swept_range
    provenance = {
        "config": c.to_dict(),
        "id": c.id,
        "version": get_version(__name__),
        "timestamp": utc_timestamp(),
        "grid": {
            "parameter": c.swept_parameter,
            "start": min(start, stop),
            "stop": max(start, stop),
            "count": count,
            "family": c.family_parameter,
            "family_values": c.family_values,
        },
        "description": c.description,
        "approximated": c.approximated,
        "undefined": undefined,
    }
    return Dataset(data, provenance)


def _check_range(
    swept_range: typing.Sequence,
    name: str,
    system: int,
) -> typing.List:
    try:
        start, stop, count = swept_range
    except (TypeError, ValueError):
        raise ConfigError(
            f"Invalid swept range {swept_range!r}, expected (start, stop, count)."
        )
    start = _check_value(name, start, system)
    stop = _check_value(name, stop, system)
    if isinstance(count, bool) or not isinstance(count, (int, np.integer)):
        raise ConfigError(f"Number of points {count!r} must be an integer.")
    if count < 2:
        raise ConfigError(f"Swept range needs at least 2 points, got {count}.")
    if start == stop:
        raise ConfigError(f"Swept range [{start}, {stop}] is empty.")
    return [start, stop, int(count)]


def _check_value(
    name: str,
    value: typing.Any,
    system: int,
) -> float:
    params = _parameters(system)
    if name not in params.keys():
        raise ConfigError(
            f"Invalid parameter '{name}' for system {system}, "
            f"expected one of {list(params.keys())}."
        )
    try:
        check_finite(value, name)
        params.__setattr__(name, value)
    except (TypeError, ValueError) as ex:
        raise ConfigError(str(ex)) from ex
    return params.__getattribute__(name)


def _check_kbt(kbt: float):
    check_finite(kbt, "kbt", DomainError)
    if not kbt > 0:
        raise DomainError(f"Thermal energy kbt={kbt} must be positive.")


def _check_quantities(
    quantities: typing.Optional[typing.Sequence[str]],
    system: int,
) -> typing.List[str]:
    allowed = _quantities(system)
    if quantities is None:
        return list(allowed)
    quantities = list(quantities)
    if not quantities:
        raise ConfigError("At least one quantity has to be requested.")
    for name in quantities:
        if name not in allowed:
            raise ConfigError(
                f"Invalid quantity '{name}' for system {system}, "
                f"expected one of {list(allowed)}."
            )
    if len(set(quantities)) != len(quantities):
        raise ConfigError(f"Quantities {quantities} contain duplicates.")
    return quantities


def _check_subsystem(
    subsystem: typing.Optional[str],
    system: int,
) -> str:
    if system == 1:
        allowed = list(define.SUBSYSTEMS)
    else:
        allowed = [define.Subsystem.OPTIC]
    if subsystem is None:
        return allowed[0]
    if subsystem not in allowed:
        raise ConfigError(
            f"Invalid subsystem '{subsystem}' for system {system}, "
            f"expected one of {allowed}."
        )
    return subsystem


def _evaluate(
    values: typing.Dict[str, float],
    *,
    system: int,
    quantities: typing.Sequence[str],
    subsystem: str,
    double_homodyne: DoubleMeasurementSpec,
    kbt: typing.Optional[float],
) -> typing.Dict[str, typing.Optional[float]]:
    r"""Evaluate quantities at one point of a system."""
    forms = _standard_forms(system, values)
    f = forms[subsystem]
    result = {}
    for name in quantities:
        if name == define.Quantity.L_N_MIRROR:
            result[name] = logarithmic_negativity(forms[define.Subsystem.MIRROR])
        elif name == define.Quantity.L_N_OPTIC:
            result[name] = logarithmic_negativity(forms[define.Subsystem.OPTIC])
        else:
            value = _work(name, f, double_homodyne)
            if value is not None and kbt is not None:
                value *= kbt
            result[name] = value
    return result


def _evaluate_row(
    c: SweepConfig,
    index: int,
    values: typing.Dict[str, float],
) -> typing.Dict[str, typing.Optional[float]]:
    params = _parameters(c.system)
    for name, value in values.items():
        params.__setattr__(name, value)
    try:
        return _evaluate(
            params(),
            system=c.system,
            quantities=c.quantities,
            subsystem=c.subsystem,
            double_homodyne=DoubleMeasurementSpec(
                define.MeasurementKind.HOMODYNE,
                theta=c.theta,
                phi=c.phi,
            ),
            kbt=c.kbt,
        )
    except DomainError as ex:
        point = ", ".join(f"{name}={value}" for name, value in values.items())
        raise type(ex)(f"Row {index} ({point}): {ex}") from ex


def _parameters(system: int) -> Parameters:
    if system == 1:
        return system1_parameters()
    return system2_parameters()


def _parse_bool(value: str) -> bool:
    if value.lower() in ["true", "yes", "1"]:
        return True
    if value.lower() in ["false", "no", "0"]:
        return False
    raise ValueError(f"Invalid boolean '{value}'.")


def _parse_list(value: str) -> typing.List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _parse_pairs(value: str) -> typing.Dict[str, float]:
    pairs = {}
    for item in _parse_list(value):
        name, separator, number = item.partition(define.SWEEP_COLUMN_SEPARATOR)
        if not separator:
            raise ValueError(f"Expected 'name=value', got '{item}'.")
        pairs[name.strip()] = float(number)
    return pairs


def _quantities(system: int) -> typing.Tuple[str, ...]:
    if system == 1:
        return define.QUANTITIES
    return tuple(q for q in define.QUANTITIES if q != define.Quantity.L_N_MIRROR)


def _standard_forms(
    system: int,
    values: typing.Dict[str, float],
) -> typing.Dict[str, TwoModeStandardForm]:
    if system == 1:
        V = steady_state_cm(System1Params(**values))
        return {
            subsystem: standard_form(subsystem_cm(V, subsystem))
            for subsystem in define.SUBSYSTEMS
        }
    p = System2Params(**values)
    return {define.Subsystem.OPTIC: optic_optic_cm(p)}


def _work(
    name: str,
    f: TwoModeStandardForm,
    double_homodyne: DoubleMeasurementSpec,
) -> typing.Optional[float]:
    homodyne = define.MeasurementKind.HOMODYNE
    heterodyne = define.MeasurementKind.HETERODYNE
    x, y, _ = f
    try:
        if name == define.Quantity.W0:
            return work_single(f, homodyne)
        elif name == define.Quantity.W1:
            return work_single(f, heterodyne)
        elif name == define.Quantity.W0_SEP:
            return work_separable_bound(x, y, homodyne)
        elif name == define.Quantity.W1_SEP:
            return work_separable_bound(x, y, heterodyne)
        elif name == define.Quantity.W0_MAX:
            return work_max(x, y, homodyne)
        elif name == define.Quantity.W1_MAX:
            return work_max(x, y, heterodyne)
        elif name == define.Quantity.W00:
            return work_double(f, double_homodyne)
        else:
            return work_double(f, DoubleMeasurementSpec(heterodyne))
    except MaxWorkUndefined:
        return None


_CONFIG_FIELDS = {
    "system": int,
    "swept_parameter": str,
    "swept_range": parse_range,
    "fixed_parameters": _parse_pairs,
    "quantities": _parse_list,
    "subsystem": str,
    "family_parameter": str,
    "family_values": lambda value: [float(v) for v in _parse_list(value)],
    "theta": float,
    "phi": float,
    "kbt": float,
    "description": str,
    "approximated": _parse_bool,
    "output_path": str,
}
