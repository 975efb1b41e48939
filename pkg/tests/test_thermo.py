import math

import numpy as np
import pytest

import optowork


def test_conditional_cm():
    # heterodyne measurement of a two-mode squeezed vacuum
    # leaves the partner in the vacuum
    for r in [0.5, 1.0, 2.0]:
        f = optowork.standard_form(optowork.two_mode_squeezed_vacuum(r))
        m = optowork.MeasurementSpec(pytest.HETERODYNE)
        np.testing.assert_allclose(
            optowork.conditional_cm(f, m),
            np.eye(2) / 2,
            atol=1e-12,
        )

    f = optowork.TwoModeStandardForm(2.0, 2.0, 1.0)
    m = optowork.MeasurementSpec(pytest.HOMODYNE, angle=math.pi / 2)
    np.testing.assert_allclose(
        optowork.conditional_cm(f, m),
        [[2.0, 0.0], [0.0, 1.5]],
        atol=1e-12,
    )

    with pytest.raises(optowork.DomainError):
        f = optowork.TwoModeStandardForm(1.0, 0.0, 0.0)
        optowork.conditional_cm(f, optowork.MeasurementSpec(pytest.HOMODYNE))


@pytest.mark.parametrize("f", pytest.RANDOM_FORMS)
@pytest.mark.parametrize("kind", [pytest.HOMODYNE, pytest.HETERODYNE])
def test_back_action(f, kind):
    sigma = optowork.conditional_cm(f, optowork.MeasurementSpec(kind))
    expected = 0.5 * math.log(f.x**2 / np.linalg.det(sigma))
    assert optowork.work_single(f, kind) == pytest.approx(expected, abs=1e-12)


def test_detector_cm():
    m = optowork.MeasurementSpec(pytest.HETERODYNE, angle=0.7)
    np.testing.assert_allclose(optowork.detector_cm(m), np.eye(2) / 2)

    m = optowork.MeasurementSpec(pytest.HOMODYNE)
    with pytest.raises(optowork.DomainError):
        optowork.detector_cm(m)
    with pytest.raises(optowork.DomainError):
        optowork.detector_cm(m, squeezing=-1.0)

    # finite squeezing approaches homodyne detection
    f = optowork.TwoModeStandardForm(2.0, 3.0, 1.5)
    C = optowork.detector_cm(m, squeezing=1e-9)
    Z = np.diag([f.z, -f.z])
    approximated = f.x * np.eye(2) - Z @ np.linalg.inv(f.y * np.eye(2) + C) @ Z.T
    np.testing.assert_allclose(
        approximated,
        optowork.conditional_cm(f, m),
        atol=1e-6,
    )


def test_measurement_spec():
    m = optowork.MeasurementSpec(pytest.HOMODYNE, angle=1)
    assert m.angle == 1.0
    assert m.arguments == {"kind": 0, "angle": 1.0}
    d = optowork.DoubleMeasurementSpec(pytest.HETERODYNE)
    assert d.kinds == (1, 1)
    assert 2 * (d.theta + d.phi) == pytest.approx(math.pi / 3)
    with pytest.raises(ValueError):
        optowork.MeasurementSpec(2)
    with pytest.raises(ValueError):
        optowork.MeasurementSpec(pytest.HOMODYNE, angle=math.inf)
    with pytest.raises(ValueError):
        optowork.DoubleMeasurementSpec(pytest.HOMODYNE, phi=math.nan)


@pytest.mark.parametrize(
    "f, kind, expected",
    [
        (optowork.TwoModeStandardForm(1.0, 1.0, 0.0), pytest.HOMODYNE, 0.0),
        (optowork.TwoModeStandardForm(1.0, 1.0, 0.0), pytest.HETERODYNE, 0.0),
        (
            optowork.TwoModeStandardForm(2.0, 2.0, 1.0),
            pytest.HOMODYNE,
            0.5 * math.log(4 / 3),
        ),
        (
            optowork.TwoModeStandardForm(2.0, 2.0, 1.0),
            pytest.HETERODYNE,
            math.log(1.25),
        ),
        # mirror pair at C=34, r=1, n_th=1
        (
            optowork.TwoModeStandardForm(1.8525803, 1.8525803, 1.6777313),
            pytest.HOMODYNE,
            0.8578,
        ),
        (
            optowork.TwoModeStandardForm(1.8525803, 1.8525803, 1.6777313),
            pytest.HETERODYNE,
            1.0380,
        ),
        pytest.param(
            optowork.TwoModeStandardForm(0.4, 1.0, 0.0),
            pytest.HOMODYNE,
            None,
            marks=pytest.mark.xfail(raises=optowork.DomainError),
        ),
        pytest.param(
            optowork.TwoModeStandardForm(1.0, 1.0, 0.0),
            2,
            None,
            marks=pytest.mark.xfail(raises=ValueError),
        ),
    ],
)
def test_work_single(f, kind, expected):
    assert optowork.work_single(f, kind) == pytest.approx(expected, abs=1e-4)


@pytest.mark.parametrize("f", pytest.RANDOM_FORMS)
def test_work_double(f):
    homodyne = optowork.DoubleMeasurementSpec(pytest.HOMODYNE)
    heterodyne = optowork.DoubleMeasurementSpec(pytest.HETERODYNE)
    # default angles reproduce single homodyne work
    assert optowork.work_double(f, homodyne) == pytest.approx(
        optowork.work_single(f, pytest.HOMODYNE), abs=1e-12
    )
    # double heterodyne work equals outcome mutual information
    assert optowork.work_double(f, heterodyne) == pytest.approx(
        optowork.outcome_mutual_information(f, heterodyne), abs=1e-12
    )


def test_work_double_angles():
    f = optowork.TwoModeStandardForm(2.0, 2.0, 1.0)
    # cos(2 theta + 2 phi) = -1/2 cancels the correlation
    d = optowork.DoubleMeasurementSpec(pytest.HOMODYNE, theta=math.pi / 3, phi=0.0)
    assert optowork.work_double(f, d) == pytest.approx(0.0, abs=1e-12)
    d = optowork.DoubleMeasurementSpec(pytest.HOMODYNE, theta=0.0, phi=0.0)
    assert optowork.work_double(f, d) == pytest.approx(0.5 * math.log(16 / 10))

    f = optowork.TwoModeStandardForm(2.0, 2.0, 1.7)
    with pytest.raises(optowork.DomainError):
        optowork.work_double(f, d)


@pytest.mark.parametrize(
    "x, y, kind, expected",
    [
        (0.5, 0.5, pytest.HOMODYNE, 0.0),
        (1.0, 1.2, pytest.HOMODYNE, 0.5 * math.log(4.8 / 0.6)),
        (1.0, 1.0, pytest.HETERODYNE, 0.5 * math.log(2)),
        (1.0, 2.0, pytest.HETERODYNE, 0.5 * math.log(2)),
        (2.0, 1.0, pytest.HETERODYNE, math.log(12 / 7)),
        pytest.param(
            1.0,
            1.5,
            pytest.HOMODYNE,
            None,
            marks=pytest.mark.xfail(raises=optowork.MaxWorkUndefined),
        ),
        pytest.param(
            0.1,
            1.0,
            pytest.HETERODYNE,
            None,
            marks=pytest.mark.xfail(raises=optowork.DomainError),
        ),
    ],
)
def test_work_max(x, y, kind, expected):
    assert optowork.work_max(x, y, kind) == pytest.approx(expected)


@pytest.mark.parametrize("f", pytest.RANDOM_FORMS)
def test_work_max_ordering(f):
    if abs(f.x - f.y) < 0.5:
        w_max = optowork.work_max(f.x, f.y, pytest.HOMODYNE)
        assert optowork.work_single(f, pytest.HOMODYNE) <= w_max + 1e-12


@pytest.mark.parametrize("f", pytest.RANDOM_FORMS)
def test_work_report_witness(f):
    entangled = optowork.logarithmic_negativity(f) > 0
    for kind in [pytest.HOMODYNE, pytest.HETERODYNE]:
        report = optowork.work_report(f, kind)
        if report.verdict == optowork.define.Verdict.INCONCLUSIVE:
            continue
        assert report.entangled_witness == entangled
        assert report.verdict == (
            optowork.define.Verdict.ENTANGLED
            if entangled
            else optowork.define.Verdict.SEPARABLE
        )


def test_work_report_kbt():
    f = optowork.TwoModeStandardForm(2.0, 2.0, 1.7)
    report = optowork.work_report(f, pytest.HOMODYNE)
    scaled = optowork.work_report(f, pytest.HOMODYNE, kbt=2.0)
    assert scaled.w == pytest.approx(2 * report.w)
    assert scaled.w_sep == pytest.approx(2 * report.w_sep)
    assert scaled.w_max == pytest.approx(2 * report.w_max)
    assert scaled.verdict == report.verdict == optowork.define.Verdict.ENTANGLED

    report = optowork.work_report(
        optowork.TwoModeStandardForm(1.0, 2.0, 0.5),
        pytest.HOMODYNE,
    )
    assert report.w_max is None
    assert not report.entangled_witness

    with pytest.raises(optowork.DomainError):
        optowork.work_report(f, pytest.HOMODYNE, kbt=0.0)


@pytest.mark.parametrize("f", pytest.RANDOM_FORMS[:50])
@pytest.mark.parametrize("kind", [pytest.HOMODYNE, pytest.HETERODYNE])
def test_work_separable_bound(f, kind):
    # bound is reached at the largest separable correlation
    z = math.sqrt((f.x - 0.5) * (f.y - 0.5))
    boundary = optowork.TwoModeStandardForm(f.x, f.y, z)
    assert optowork.work_single(boundary, kind) == pytest.approx(
        optowork.work_separable_bound(f.x, f.y, kind), abs=1e-12
    )
