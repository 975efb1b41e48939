import argparse
import math
import numbers
import operator
import os
import typing

import audobject


_OPERATORS = {
    ">=": operator.ge,
    "<=": operator.le,
    "!=": operator.ne,
    ">": operator.gt,
    "<": operator.lt,
}


def _parse_interval(
    interval: str,
) -> typing.List[typing.Tuple[str, float]]:
    r"""Split interval string into (operator, bound) pairs."""
    conditions = []
    for token in interval.split(","):
        token = token.strip()
        for symbol in _OPERATORS:  # two-character symbols come first
            if token.startswith(symbol):
                bound = float(token[len(symbol) :])
                conditions.append((symbol, bound))
                break
        else:
            raise ValueError(
                f"Invalid interval condition '{token}', "
                f"expected one of {list(_OPERATORS)} followed by a number."
            )
    return conditions


class Parameter(audobject.Object):
    r"""Single physical parameter.

    A parameter holds a value of a specific type,
    possibly restricted to a set of choices
    or to an interval.
    The interval is written as a comma separated list
    of conditions,
    e.g. ``'>0'`` or ``'>=0,<=100'``.

    Args:
        value_type: data type, one of
            (``str``, ``int``, ``float``, ``bool``)
        description: description
        value: value, if ``None`` set to ``default_value``
        default_value: default value
        choices: list with choices
        interval: conditions the value has to fulfill,
            ``None`` accepts any value
        unit: physical unit of the value

    Raises:
        TypeError: if value has an invalid type
        ValueError: if value is not in choices
            or outside of interval

    Examples:
        >>> r = Parameter(
        ...     value_type=float,
        ...     description="squeezing parameter",
        ...     default_value=1.0,
        ...     interval=">=0",
        ... )
        >>> # check interval
        >>> 1.5 in r
        True
        >>> -1.0 in r
        False
        >>> # get/set value
        >>> r.value
        1.0
        >>> r.set_value(2)
        >>> r.value
        2.0
        >>> # set invalid value
        >>> try:
        ...     r.set_value(-0.5)
        ... except ValueError as ex:
        ...     print(ex)
        Invalid value '-0.5', expected a value in '>=0'.

    """  # noqa: E501

    @audobject.init_decorator(
        resolvers={
            "value_type": audobject.resolver.Type,
        }
    )
    def __init__(
        self,
        *,
        value_type: type = float,
        description: str = "",
        value: typing.Any = None,
        default_value: typing.Any = None,
        choices: typing.Sequence[typing.Any] = None,
        interval: str = None,
        unit: str = None,
    ):
        self.value_type = value_type
        r"""Data type of parameter"""
        self.description = description
        r"""Description of parameter"""
        self.value = None
        r"""Value of parameter, use 'set_value' for type checking"""
        self.default_value = default_value
        r"""Default value of parameter"""
        self.choices = choices
        r"""Possible choices for parameter"""
        self.interval = interval
        r"""Conditions the value has to fulfill"""
        self.unit = unit
        r"""Physical unit of parameter"""

        if interval is not None:
            _parse_interval(interval)

        if default_value is not None:
            self._check_value(self._cast(default_value))
            self.default_value = self._cast(default_value)

        if value is not None:
            self.set_value(value)
        else:
            self.set_value(self.default_value)

    def __contains__(self, value: typing.Any) -> bool:
        r"""Check if value lies inside the interval of the parameter."""
        if self.interval is None:
            return True
        try:
            value = float(value)
        except (TypeError, ValueError):
            return False
        if math.isnan(value):
            return False
        return all(
            _OPERATORS[symbol](value, bound)
            for symbol, bound in _parse_interval(self.interval)
        )

    def set_value(self, value: typing.Any):
        r"""Sets a new value.

        Applies additional checks,
        e.g. if value is of the expected type
        and inside the interval.
        Integers are accepted for ``float`` parameters
        and converted.

        Args:
            value: new value

        Raises:
            TypeError: if value has an invalid type
            ValueError: if value is not in choices
                or outside of interval

        """
        value = self._cast(value)
        self._check_value(value)
        self.value = value

    def _cast(self, value: typing.Any) -> typing.Any:
        if (
            self.value_type is float
            and isinstance(value, numbers.Real)
            and not isinstance(value, bool)
        ):
            return float(value)
        return value

    def _check_value(self, value: typing.Any):
        r"""Check if value matches expected type and interval."""
        if value is not None and not isinstance(value, self.value_type):
            raise TypeError(
                f"Invalid type '{type(value)}', expected {self.value_type}."
            )
        if self.choices is not None and value not in self.choices:
            raise ValueError(
                f"Invalid value '{value}', expected one of {self.choices}."
            )
        if value is not None and value not in self:
            raise ValueError(
                f"Invalid value '{value}', expected a value in '{self.interval}'."
            )


class Parameters(audobject.Dictionary):
    r"""List of physical parameters.

    Args:
        **kwargs: :class:`optowork.Parameter` objects

    Examples:
        >>> params = Parameters(
        ...     r=Parameter(
        ...         value_type=float,
        ...         description="squeezing parameter",
        ...         default_value=1.0,
        ...         interval=">=0",
        ...     ),
        ...     n_th=Parameter(
        ...         value_type=float,
        ...         description="thermal phonon number",
        ...         default_value=0.0,
        ...         interval=">=0",
        ...     ),
        ... )
        >>> params.r = 1.5
        >>> params.r
        1.5
        >>> params()
        {'r': 1.5, 'n_th': 0.0}
        >>> params.to_path(delimiter="_")
        'r[1.5]_n_th[0.0]'

    """  # noqa: E501

    def __init__(
        self,
        **kwargs,
    ):
        super().__init__(**kwargs)

    def from_command_line(
        self,
        args: argparse.Namespace,
    ) -> "Parameters":
        r"""Parse parameters from command line parser.

        Arguments that were not given
        on the command line
        keep their current value.

        Args:
            args: command line arguments

        """
        for key, value in args.__dict__.items():
            if key in self.keys() and value is not None:
                self.__setattr__(key, value)
        return self

    def to_command_line(
        self,
        parser: argparse.ArgumentParser,
    ):
        r"""Add parameters to command line parser.

        .. note:: Command line arguments are named --<name>.

        Args:
            parser: command line parser

        """
        for name, param in self.items():
            help = param.description
            if param.unit is not None:
                help = f"{help} [{param.unit}]"
            if param.interval is not None:
                help = f"{help} ({param.interval})"
            help = f"{help}, default: {param.value}"

            if param.value_type is bool:
                parser.add_argument(
                    f"--{name}",
                    action="store_true",
                    default=None,
                    help=help,
                )
            else:
                parser.add_argument(
                    f"--{name}",
                    type=param.value_type,
                    default=None,
                    choices=param.choices,
                    help=help,
                )

    def to_path(
        self,
        *,
        delimiter: str = os.path.sep,
        include: typing.Sequence[str] = None,
        exclude: typing.Sequence[str] = None,
        sort: bool = False,
    ) -> str:
        r"""Creates path from parameters.

        Args:
            delimiter: delimiter character
            include: list of parameters to include
            exclude: list of parameters to exclude
            sort: sort parameters by name

        Returns:
            path with one ``name[value]`` part per parameter

        """
        names = list(self.keys())
        if sort:
            names = sorted(names)
        exclude = set(exclude or [])
        if include is not None:
            exclude.update(name for name in names if name not in include)
        parts = [f"{name}[{self[name].value}]" for name in names if name not in exclude]
        return delimiter.join(parts)

    def __call__(self) -> typing.Dict[str, typing.Any]:
        r"""Return parameters as dictionary."""
        return {name: param.value for name, param in self.items()}

    def __getattribute__(self, name) -> typing.Any:  # noqa: D105
        if not name == "__dict__" and name in self.__dict__:
            p = self.__dict__[name]
            if isinstance(p, Parameter):
                return p.value
        return object.__getattribute__(self, name)

    def __setattr__(self, name: str, value: typing.Any):  # noqa: D105
        if name not in self.__dict__:
            raise AttributeError(f"Unknown parameter '{name}'.")
        self.__dict__[name].set_value(value)

    def __str__(self):  # noqa: D105
        table = [
            ["Name", "Value", "Default", "Interval", "Unit", "Description"],
            ["----", "-----", "-------", "--------", "----", "-----------"],
        ]
        for name, p in self.items():
            table.append(
                [
                    name,
                    p.value,
                    p.default_value,
                    p.interval,
                    p.unit,
                    p.description,
                ]
            )
        padding = 2
        # Longest string in each column
        transposed_table = [list(x) for x in zip(*table)]
        col_width = [
            len(max([str(word) for word in row], key=len)) + padding
            for row in transposed_table
        ]
        # Don't pad the last column
        col_width[-1] -= padding
        rows = [
            "".join(str(word).ljust(width) for word, width in zip(row, col_width))
            for row in table
        ]
        return "\n".join(rows)


def system1_parameters() -> Parameters:
    r"""Sweepable parameters of the two-cavity system.

    Rates are given in units of the cavity damping
    unless absolute units are used consistently.

    Returns:
        parameters with default values

    Examples:
        >>> system1_parameters()()
        {'kappa': 1.0, 'gamma': 0.05, 'C': 34.0, 'r': 1.0, 'n_th': 1.0}

    """
    return Parameters(
        kappa=Parameter(
            value_type=float,
            description="cavity damping rate",
            default_value=1.0,
            interval=">0",
        ),
        gamma=Parameter(
            value_type=float,
            description="mechanical damping rate",
            default_value=0.05,
            interval=">0",
        ),
        C=Parameter(
            value_type=float,
            description="optomechanical cooperativity",
            default_value=34.0,
            interval=">=0",
        ),
        r=Parameter(
            value_type=float,
            description="squeezing parameter",
            default_value=1.0,
            interval=">=0",
        ),
        n_th=Parameter(
            value_type=float,
            description="mean thermal phonon number",
            default_value=1.0,
            interval=">=0",
        ),
    )


def system2_parameters() -> Parameters:
    r"""Sweepable parameters of the single-mirror system.

    Returns:
        parameters with default values

    Examples:
        >>> system2_parameters()()
        {'x': 1.5, 'omega_t': 0.0}

    """
    return Parameters(
        x=Parameter(
            value_type=float,
            description="coupling ratio g2/g1",
            default_value=1.5,
            interval=">1",
        ),
        omega_t=Parameter(
            value_type=float,
            description="dimensionless time",
            default_value=0.0,
            unit="rad",
            interval=">-inf,<inf",
        ),
    )
