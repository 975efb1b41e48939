import argparse
import sys
import typing

import audeer

from optowork.core import define
from optowork.core.check import self_check
from optowork.core.errors import ConfigError
from optowork.core.errors import DomainError
from optowork.core.errors import IoError
from optowork.core.parameter import system1_parameters
from optowork.core.parameter import system2_parameters
from optowork.core.preset import ALIASES
from optowork.core.preset import available_presets
from optowork.core.preset import run_figure_preset
from optowork.core.sweep import SweepConfig
from optowork.core.sweep import emit_csv
from optowork.core.sweep import evaluate_point
from optowork.core.sweep import metadata_path
from optowork.core.sweep import parse_config_file
from optowork.core.sweep import sweep


class _ArgumentParser(argparse.ArgumentParser):
    r"""Parser that exits with the code of a configuration error."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(define.ExitCode.CONFIG_ERROR, f"{self.prog}: error: {message}\n")


def main(argv: typing.Sequence[str] = None) -> int:
    r"""Entry point of the ``optowork`` command.

    Args:
        argv: command line arguments,
            if ``None`` :data:`sys.argv` is used

    Returns:
        exit code, see :class:`optowork.define.ExitCode`

    """
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return args.command(args)
    except ConfigError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return define.ExitCode.CONFIG_ERROR
    except DomainError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return define.ExitCode.DOMAIN_ERROR
    except IoError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return define.ExitCode.IO_ERROR


def _check(args: argparse.Namespace) -> int:
    report = self_check()
    print(report)
    print()
    passed = sum(result.passed for result in report.results)
    print(f"{passed} of {len(report)} checks passed")
    if not report.passed:
        return define.ExitCode.CHECK_FAILED
    return define.ExitCode.SUCCESS


def _point(args: argparse.Namespace) -> int:
    params = system1_parameters() if args.system == 1 else system2_parameters()
    other = system2_parameters() if args.system == 1 else system1_parameters()
    for name in other.keys():
        if name not in params.keys() and getattr(args, name) is not None:
            raise ConfigError(
                f"Parameter '{name}' does not belong to system {args.system}."
            )
    try:
        params.from_command_line(args)
    except (TypeError, ValueError) as ex:
        raise ConfigError(str(ex)) from ex
    values = evaluate_point(
        args.system,
        params(),
        subsystem=args.subsystem,
        kbt=args.kbt,
    )
    print(params)
    print()
    width = max(len(name) for name in values)
    for name, value in values.items():
        text = define.CSV_EMPTY if value is None else repr(value)
        print(f"{name.ljust(width)}  {text}")
    return define.ExitCode.SUCCESS


def _preset(args: argparse.Namespace) -> int:
    d = run_figure_preset(
        args.id,
        points=args.points,
        kbt=args.kbt,
        num_workers=args.workers,
    )
    _write(d, args.out)
    return define.ExitCode.SUCCESS


def _presets(args: argparse.Namespace) -> int:
    aliases = {}
    for alias, name in ALIASES.items():
        aliases.setdefault(name, []).append(alias)
    for name, description in available_presets().items():
        names = ", ".join([name] + aliases.get(name, []))
        print(f"{names}\n    {description}")
    return define.ExitCode.SUCCESS


def _sweep(args: argparse.Namespace) -> int:
    c = parse_config_file(args.config)
    if args.kbt is not None:
        c = SweepConfig(**{**c.arguments, "kbt": args.kbt})
    out = args.out or c.output_path
    if out is None:
        raise ConfigError("No output path given, use --out or set 'output_path'.")
    d = sweep(c, num_workers=args.workers)
    _write(d, out)
    return define.ExitCode.SUCCESS


def _write(d, path: str):
    emit_csv(d, path)
    path = audeer.safe_path(path)
    print(path)
    print(metadata_path(path))


def _parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="optowork",
        description=(
            "Entanglement and work extraction "
            "of Gaussian optomechanical states."
        ),
    )
    subparsers = parser.add_subparsers(
        title="commands",
        dest="name",
        required=True,
        parser_class=_ArgumentParser,
    )

    preset = subparsers.add_parser(
        "preset",
        help="evaluate a figure preset",
        description="Evaluate a figure preset and write it to CSV.",
    )
    preset.add_argument(
        "id",
        help="preset identifier or alias, see 'optowork presets'",
    )
    _add_output_arguments(preset, required=True)
    preset.add_argument(
        "--points",
        type=int,
        default=None,
        help="number of points per sweep",
    )
    preset.set_defaults(command=_preset)

    sweep_parser = subparsers.add_parser(
        "sweep",
        help="evaluate a sweep configuration",
        description="Evaluate a sweep configuration file and write it to CSV.",
    )
    sweep_parser.add_argument(
        "--config",
        required=True,
        help="key=value text file or YAML file with a serialized SweepConfig",
    )
    _add_output_arguments(sweep_parser, required=False)
    sweep_parser.set_defaults(command=_sweep)

    check = subparsers.add_parser(
        "check",
        help="run the self-check suite",
        description="Run the invariant suite and report residuals.",
    )
    check.set_defaults(command=_check)

    presets = subparsers.add_parser(
        "presets",
        help="list figure presets",
        description="List figure presets and their aliases.",
    )
    presets.set_defaults(command=_presets)

    point = subparsers.add_parser(
        "point",
        help="evaluate all quantities at one parameter point",
        description=(
            "Evaluate all quantities of a system at one parameter point. "
            "Parameters not given keep their defaults."
        ),
    )
    point.add_argument(
        "--system",
        type=int,
        choices=[1, 2],
        required=True,
        help="1 for the two-cavity system, 2 for the single-mirror system",
    )
    point.add_argument(
        "--subsystem",
        choices=list(define.SUBSYSTEMS),
        default=None,
        help="mode pair on which work is evaluated",
    )
    point.add_argument(
        "--kbt",
        type=float,
        default=None,
        help="multiply work by this thermal energy",
    )
    system1_parameters().to_command_line(point)
    system2_parameters().to_command_line(point)
    point.set_defaults(command=_point)

    return parser


def _add_output_arguments(
    parser: argparse.ArgumentParser,
    *,
    required: bool,
):
    parser.add_argument(
        "--out",
        required=required,
        default=None,
        help="path of CSV file, metadata is written next to it",
    )
    parser.add_argument(
        "--kbt",
        type=float,
        default=None,
        help="multiply work columns by this thermal energy",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="number of threads evaluating sweep points",
    )
