import itertools
import math
import typing

import numpy as np

from optowork.core import define
from optowork.core.config import config
from optowork.core.gaussian import TwoModeStandardForm
from optowork.core.gaussian import logarithmic_negativity
from optowork.core.gaussian import lyapunov_residual
from optowork.core.gaussian import standard_form
from optowork.core.gaussian import symplectic_eigenvalues
from optowork.core.gaussian import two_mode_squeezed_vacuum
from optowork.core.system1 import System1Params
from optowork.core.system1 import closed_form_blocks
from optowork.core.system1 import drift_matrix
from optowork.core.system1 import noise_matrix
from optowork.core.system1 import steady_state_cm
from optowork.core.system1 import subsystem_cm
from optowork.core.system2 import System2Params
from optowork.core.system2 import optic_optic_cm
from optowork.core.system2 import printed_tripartite_cm
from optowork.core.system2 import tripartite_cm
from optowork.core.thermo import DoubleMeasurementSpec
from optowork.core.thermo import MeasurementSpec
from optowork.core.thermo import conditional_cm
from optowork.core.thermo import outcome_mutual_information
from optowork.core.thermo import work_double
from optowork.core.thermo import work_max
from optowork.core.thermo import work_report
from optowork.core.thermo import work_separable_bound
from optowork.core.thermo import work_single


SYSTEM1_GRID = {
    "C": [1.0, 5.0, 34.0, 68.0],
    "r": [0.0, 0.5, 1.0, 1.5, 2.0],
    "n_th": [0.0, 1.0, 2.0, 5.0],
    "gamma": [0.05, 0.2],
}
r"""Parameter grid of the two-cavity checks, rates in units of kappa."""

SYSTEM2_GRID = {
    "x": [1.1, 1.5, 2.5, 5.0],
    "omega_t": [2 * math.pi * k / 64 for k in range(64)],
}
r"""Parameter grid of the single-mirror checks."""

RANDOM_SAMPLES = 1000
RANDOM_SEED = 1


class CheckResult(typing.NamedTuple):
    r"""Outcome of a single self-check."""

    name: str
    r"""Name of the check"""
    passed: bool
    r"""``True`` if the residual is within tolerance"""
    residual: float
    r"""Worst residual,
    for counting checks the number of violations"""
    tolerance: float
    r"""Largest accepted residual"""
    message: str
    r"""Description or error message"""


class CheckReport:
    r"""Results of :func:`optowork.self_check`.

    Args:
        results: result per check

    """

    def __init__(
        self,
        results: typing.Sequence[CheckResult],
    ):
        self.results = list(results)
        r"""Result per check"""

    def __len__(self) -> int:  # noqa: D105
        return len(self.results)

    def __str__(self):  # noqa: D105
        table = [["Check", "Result", "Residual", "Tolerance", "Description"]]
        for result in self.results:
            table.append(
                [
                    result.name,
                    "pass" if result.passed else "FAIL",
                    f"{result.residual:.3g}",
                    f"{result.tolerance:.0e}",
                    result.message,
                ]
            )
        padding = 2
        widths = [max(len(row[i]) for row in table) + padding for i in range(4)]
        rows = [
            "".join(word.ljust(width) for word, width in zip(row, widths)) + row[-1]
            for row in table
        ]
        return "\n".join(rows)

    @property
    def passed(self) -> bool:
        r"""``True`` if all checks passed."""
        return all(result.passed for result in self.results)


def random_standard_forms(
    count: int = RANDOM_SAMPLES,
    *,
    seed: int = RANDOM_SEED,
) -> typing.List[TwoModeStandardForm]:
    r"""Draw physical two-mode standard forms.

    Variances are uniform in :math:`[1/2, 5]`,
    the correlation is uniform in :math:`[0, 0.99 z_\text{max}^2]`
    with the largest physical correlation
    :math:`z_\text{max}^2 = xy - (1 + 2|x - y|)/4`.

    Args:
        count: number of forms
        seed: seed of the random generator

    Returns:
        standard forms

    Examples:
        >>> forms = random_standard_forms(3)
        >>> len(forms)
        3

    """
    rng = np.random.default_rng(seed)
    forms = []
    for _ in range(count):
        x, y = rng.uniform(0.5, 5.0, size=2)
        z_max_squared = max(0.0, x * y - (1 + 2 * abs(x - y)) / 4)
        z = math.sqrt(rng.uniform(0.0, 0.99) * z_max_squared)
        forms.append(TwoModeStandardForm(float(x), float(y), z))
    return forms


def self_check() -> CheckReport:
    r"""Run the invariant suite.

    Every check is evaluated on its grid
    and reports its worst residual.
    Exceptions inside a check count as failure
    and do not stop the suite.

    Returns:
        report

    """
    results = []
    for name, (function, tolerance, description) in _CHECKS.items():
        try:
            residual = float(function())
            passed = bool(residual <= tolerance)
            message = description
        except Exception as ex:
            residual = math.nan
            passed = False
            message = f"{type(ex).__name__}: {ex}"
        results.append(CheckResult(name, passed, residual, tolerance, message))
    return CheckReport(results)


def _system1_points() -> typing.Iterator[System1Params]:
    grid = SYSTEM1_GRID
    for C, r, n_th, gamma in itertools.product(
        grid["C"], grid["r"], grid["n_th"], grid["gamma"]
    ):
        yield System1Params(kappa=1.0, gamma=gamma, C=C, r=r, n_th=n_th)


def _system2_points() -> typing.Iterator[System2Params]:
    for x, omega_t in itertools.product(SYSTEM2_GRID["x"], SYSTEM2_GRID["omega_t"]):
        yield System2Params(x=x, omega_t=omega_t)


def _system1_forms() -> typing.Iterator[TwoModeStandardForm]:
    for p in _system1_points():
        V = steady_state_cm(p)
        for subsystem in define.SUBSYSTEMS:
            yield standard_form(subsystem_cm(V, subsystem))


def _angle_identity() -> float:
    homodyne = define.MeasurementKind.HOMODYNE
    d = DoubleMeasurementSpec(homodyne, theta=math.pi / 6, phi=0.0)
    return max(
        abs(work_double(f, d) - work_single(f, homodyne))
        for f in random_standard_forms()
    )


def _back_action() -> float:
    worst = 0.0
    for f in random_standard_forms():
        for kind in define.MEASUREMENT_KINDS:
            sigma = conditional_cm(f, MeasurementSpec(kind))
            expected = 0.5 * math.log(f.x**2 / np.linalg.det(sigma))
            worst = max(worst, abs(work_single(f, kind) - expected))
    return worst


def _bound_ordering() -> float:
    homodyne = define.MeasurementKind.HOMODYNE
    worst = 0.0
    for f in random_standard_forms():
        if abs(f.x - f.y) < 0.5:
            excess = work_single(f, homodyne) - work_max(f.x, f.y, homodyne)
            worst = max(worst, excess)
    return worst


def _double_heterodyne() -> float:
    d = DoubleMeasurementSpec(define.MeasurementKind.HETERODYNE)
    return max(
        abs(work_double(f, d) - outcome_mutual_information(f, d))
        for f in random_standard_forms()
    )


def _lyapunov_closed_form() -> float:
    worst = 0.0
    for p in _system1_points():
        V = steady_state_cm(p)
        blocks = closed_form_blocks(p)
        pairs = [
            (define.Subsystem.MIRROR, blocks.mirror_mirror),
            (define.Subsystem.OPTIC, blocks.optic_optic),
        ]
        for subsystem, expected in pairs:
            deviation = np.abs(subsystem_cm(V, subsystem) - expected.matrix())
            worst = max(worst, float(deviation.max()))
    return worst


def _lyapunov_residual() -> float:
    return max(
        lyapunov_residual(drift_matrix(p), steady_state_cm(p), noise_matrix(p))
        for p in _system1_points()
    )


def _route_equivalence() -> float:
    return max(
        float(np.abs(tripartite_cm(p) - printed_tripartite_cm(p)).max())
        for p in _system2_points()
    )


def _separable_identity() -> float:
    worst = 0.0
    for f in random_standard_forms():
        z = math.sqrt((f.x - 0.5) * (f.y - 0.5))
        boundary = TwoModeStandardForm(f.x, f.y, z)
        for kind in define.MEASUREMENT_KINDS:
            difference = work_single(boundary, kind) - work_separable_bound(
                f.x, f.y, kind
            )
            worst = max(worst, abs(difference))
    return worst


def _system1_physicality() -> float:
    worst = 0.0
    for p in _system1_points():
        nu = symplectic_eigenvalues(steady_state_cm(p))
        worst = max(worst, define.VACUUM_VARIANCE - float(nu.min()))
    return worst


def _system2_determinant() -> float:
    return max(abs(np.linalg.det(tripartite_cm(p)) - 1 / 64) for p in _system2_points())


def _system2_purity() -> float:
    return max(
        float(np.abs(symplectic_eigenvalues(tripartite_cm(p)) - 0.5).max())
        for p in _system2_points()
    )


def _system2_vacuum() -> float:
    worst = 0.0
    for x in SYSTEM2_GRID["x"]:
        p = System2Params(x=x, omega_t=0.0)
        f = optic_optic_cm(p)
        values = [
            float(np.abs(tripartite_cm(p) - np.eye(6) / 2).max()),
            logarithmic_negativity(f),
        ] + [work_single(f, kind) for kind in define.MEASUREMENT_KINDS]
        worst = max(worst, *values)
    return worst


def _tmsv_calibration() -> float:
    return max(
        abs(logarithmic_negativity(standard_form(two_mode_squeezed_vacuum(r))) - 2 * r)
        for r in [0.5, 1.0, 2.0]
    )


def _trend_bath() -> float:
    # increase of L_N along n_th
    worst = 0.0
    for subsystem in define.SUBSYSTEMS:
        values = []
        for n_th in np.linspace(0.0, 5.0, config.DEFAULT_POINTS):
            p = System1Params(C=34.0, r=1.0, n_th=float(n_th))
            f = standard_form(subsystem_cm(steady_state_cm(p), subsystem))
            values.append(logarithmic_negativity(f))
        worst = max(worst, float(np.diff(values).max()))
    return worst


def _trend_cooperativity() -> float:
    # decrease of work along C, single and double measurements
    double = [DoubleMeasurementSpec(kind) for kind in define.MEASUREMENT_KINDS]
    worst = 0.0
    for n_th in [1.0, 2.0]:
        rows = []
        for C in np.linspace(0.0, 100.0, config.DEFAULT_POINTS):
            p = System1Params(C=float(C), r=1.5, n_th=n_th)
            f = closed_form_blocks(p).mirror_mirror
            row = []
            for kind in define.MEASUREMENT_KINDS:
                report = work_report(f, kind)
                row += [report.w, report.w_sep, report.w_max]
            row += [work_double(f, d) for d in double]
            rows.append(row)
        worst = max(worst, float(-np.diff(np.array(rows), axis=0).min()))
    return worst


def _trend_squeezing() -> float:
    # decrease of L_N along r
    worst = 0.0
    for subsystem in define.SUBSYSTEMS:
        values = []
        for r in np.linspace(0.0, 2.0, config.DEFAULT_POINTS):
            p = System1Params(C=34.0, r=float(r), n_th=1.0)
            f = standard_form(subsystem_cm(steady_state_cm(p), subsystem))
            values.append(logarithmic_negativity(f))
        worst = max(worst, float(-np.diff(values).min()))
    return worst


def _witness_consistency() -> float:
    forms = list(_system1_forms()) + [optic_optic_cm(p) for p in _system2_points()]
    violations = 0
    for f in forms:
        entangled = logarithmic_negativity(f) > 0
        for kind in define.MEASUREMENT_KINDS:
            report = work_report(f, kind)
            if report.verdict == define.Verdict.INCONCLUSIVE:
                continue
            if report.entangled_witness != entangled:
                violations += 1
    return violations


def _worked_point() -> float:
    p = System2Params(x=1.5, omega_t=math.pi)
    f = optic_optic_cm(p)
    deviations = [abs(a - b) for a, b in zip(f, (6.26, 6.26, 6.24))]
    deviations.append(abs(logarithmic_negativity(f) + math.log(0.04)))
    printed = standard_form(printed_tripartite_cm(p)[:4, :4])
    deviations += [abs(a - b) for a, b in zip(f, printed)]
    return max(deviations)


_CHECKS = {
    "lyapunov-closed-form": (
        _lyapunov_closed_form,
        1e-10,
        "steady state blocks match closed forms",
    ),
    "lyapunov-residual": (
        _lyapunov_residual,
        1e-10,
        "steady state solves AV + VA^T = -D",
    ),
    "system1-physicality": (
        _system1_physicality,
        1e-9,
        "steady states obey the uncertainty principle",
    ),
    "tmsv-calibration": (
        _tmsv_calibration,
        1e-10,
        "L_N of two-mode squeezed vacuum equals 2r",
    ),
    "system2-purity": (
        _system2_purity,
        1e-9,
        "tripartite symplectic eigenvalues equal 1/2",
    ),
    "system2-determinant": (
        _system2_determinant,
        1e-9,
        "tripartite determinant equals 1/64",
    ),
    "system2-route-equivalence": (
        _route_equivalence,
        1e-12,
        "composed and explicit tripartite matrices agree",
    ),
    "system2-vacuum": (
        _system2_vacuum,
        1e-12,
        "vacuum without entanglement or work at t=0",
    ),
    "system2-worked-point": (
        _worked_point,
        1e-10,
        "x=1.5, t=pi gives (6.26, 6.26, 6.24) and L_N=-ln 0.04",
    ),
    "witness-consistency": (
        _witness_consistency,
        0,
        "work above separable bound iff L_N > 0",
    ),
    "separable-identity": (
        _separable_identity,
        1e-12,
        "work at largest separable correlation equals separable bound",
    ),
    "angle-identity": (
        _angle_identity,
        1e-12,
        "double homodyne work at 2(theta+phi)=pi/3 equals single homodyne work",
    ),
    "back-action": (
        _back_action,
        1e-12,
        "work equals log determinant ratio of conditional state",
    ),
    "bound-ordering": (
        _bound_ordering,
        1e-12,
        "homodyne work stays below maximum work",
    ),
    "double-heterodyne": (
        _double_heterodyne,
        1e-12,
        "double heterodyne work equals outcome mutual information",
    ),
    "trend-bath": (
        _trend_bath,
        1e-12,
        "L_N does not grow with thermal phonon number",
    ),
    "trend-cooperativity": (
        _trend_cooperativity,
        1e-12,
        "mirror work does not shrink with cooperativity",
    ),
    "trend-squeezing": (
        _trend_squeezing,
        1e-12,
        "L_N does not shrink with squeezing",
    ),
}
