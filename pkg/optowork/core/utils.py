import datetime
import importlib
import math
import typing


def check_finite(
    value: float,
    name: str,
    error: type = ValueError,
):
    r"""Raise ``error`` if value is not a finite number."""
    try:
        finite = math.isfinite(value)
    except TypeError:
        finite = False
    if not finite:
        raise error(f"Value of '{name}' must be a finite number, got {value!r}.")


def get_version(module_name: str) -> typing.Optional[str]:
    r"""Version of the top-level package of a module."""
    module = importlib.import_module(module_name.split(".")[0])
    if "__version__" in module.__dict__:
        return module.__version__
    else:
        return None  # pragma: no cover


def parse_range(
    value: str,
) -> typing.Tuple[float, float, int]:
    r"""Parse range given as ``start:stop:count``.

    Args:
        value: range string

    Returns:
        start, stop and number of points

    Raises:
        ValueError: if string does not contain
            two floats and an integer

    Examples:
        >>> parse_range("0:5:201")
        (0.0, 5.0, 201)

    """
    parts = value.split(":")
    if len(parts) != 3:
        raise ValueError(f"Invalid range '{value}', expected 'start:stop:count'.")
    start, stop, count = parts
    return float(start), float(stop), int(count)


def utc_timestamp() -> str:
    r"""Current time in UTC as ISO 8601 string."""
    now = datetime.datetime.now(datetime.timezone.utc)
    return now.isoformat(timespec="seconds")
