import math
import os

import pytest

import optowork


def test_check(script_runner):
    result = script_runner.run(["optowork", "check"])
    assert result.returncode == optowork.define.ExitCode.SUCCESS
    assert "18 of 18 checks passed" in result.stdout
    assert "lyapunov-closed-form" in result.stdout


def test_help(script_runner):
    result = script_runner.run(["optowork", "--help"])
    assert result.success
    for command in ["preset", "sweep", "check", "presets", "point"]:
        assert command in result.stdout


def test_point(script_runner):
    result = script_runner.run(
        [
            "optowork",
            "point",
            "--system",
            "2",
            "--x",
            "1.5",
            f"--omega_t={math.pi}",
        ]
    )
    assert result.success
    lines = result.stdout.split("\n")
    assert lines[0].split()[0] == "Name"
    values = dict(line.split() for line in lines if line.startswith("L_N_optic"))
    assert float(values["L_N_optic"]) == pytest.approx(-math.log(0.04))

    result = script_runner.run(
        [
            "optowork",
            "point",
            "--system",
            "1",
            "--subsystem",
            "optic",
            "--kbt",
            "2",
        ]
    )
    assert result.success
    assert "W11" in result.stdout


@pytest.mark.parametrize(
    "args",
    [
        ["point", "--system", "2", "--C", "3"],
        ["point", "--system", "1", "--n_th", "-1"],
        ["point", "--system", "2", "--x", "1"],
        ["point", "--system", "2", "--subsystem", "mirror"],
        ["point", "--system", "3"],
        ["point"],
        ["foo"],
    ],
)
def test_point_errors(script_runner, args):
    result = script_runner.run(["optowork"] + args)
    assert result.returncode == optowork.define.ExitCode.CONFIG_ERROR


@pytest.mark.parametrize(
    "args",
    [
        ["point", "--system", "1", "--kbt", "-2"],
        ["point", "--system", "1", "--kbt", "nan"],
        ["point", "--system", "1", "--r", "400"],
        ["point", "--system", "2", "--x", "1.0001"],
    ],
)
def test_point_domain_errors(script_runner, args):
    result = script_runner.run(["optowork"] + args)
    assert result.returncode == optowork.define.ExitCode.DOMAIN_ERROR
    assert result.stderr.startswith("error:")
    assert "W0" not in result.stdout


def test_preset(tmpdir, script_runner):
    paths = [os.path.join(tmpdir, f"{name}.csv") for name in ["a", "b"]]
    for path, workers in zip(paths, [1, 3]):
        result = script_runner.run(
            [
                "optowork",
                "preset",
                "fig11",
                "--points",
                "5",
                "--workers",
                str(workers),
                "--out",
                path,
            ]
        )
        assert result.success
        assert os.path.exists(path)
        assert os.path.exists(optowork.metadata_path(path))
        assert result.stdout.split("\n")[0].endswith("csv")

    # results do not depend on run or number of workers
    with open(paths[0], "rb") as fp:
        a = fp.read()
    with open(paths[1], "rb") as fp:
        b = fp.read()
    assert a == b
    assert a.startswith(b"x,omega_t,W0,W1,W00,W11\n")
    assert len(a.decode().strip().split("\n")) == 11


@pytest.mark.parametrize(
    "args, exit_code",
    [
        (["preset", "fig1", "--out", "out.csv"], 1),
        (["preset", "fig3"], 1),
        (["preset", "fig3", "--points", "1", "--out", "out.csv"], 1),
        (["preset", "fig3", "--kbt", "0", "--out", "out.csv"], 1),
        (["preset", "fig3", "--workers", "0", "--out", "out.csv"], 1),
        (["sweep", "--config", "missing.txt", "--out", "out.csv"], 3),
    ],
)
def test_preset_sweep_errors(tmpdir, script_runner, args, exit_code):
    result = script_runner.run(["optowork"] + args, cwd=str(tmpdir))
    assert result.returncode == exit_code
    assert result.stderr
    assert not os.path.exists(os.path.join(tmpdir, "out.csv"))


def test_presets(script_runner):
    result = script_runner.run(["optowork", "presets"])
    assert result.success
    assert "fig5, fig6, optic-bath" in result.stdout
    for name in optowork.available_presets():
        assert name in result.stdout


def test_sweep(tmpdir, script_runner):
    out = os.path.join(tmpdir, "dynamic.csv")
    config = os.path.join(tmpdir, "dynamic.txt")
    with open(config, "w") as fp:
        fp.write(
            "system = 2\n"
            "swept_parameter = omega_t\n"
            "swept_range = 0:6.283185307179586:9\n"
            "fixed_parameters = x=2.5\n"
            "quantities = L_N_optic, W0, W0_sep\n"
            f"output_path = {out}\n"
        )
    result = script_runner.run(["optowork", "sweep", "--config", config])
    assert result.success
    with open(out) as fp:
        lines = fp.read().strip().split("\n")
    assert lines[0] == "omega_t,L_N_optic,W0,W0_sep"
    assert len(lines) == 10

    scaled = os.path.join(tmpdir, "scaled.csv")
    result = script_runner.run(
        ["optowork", "sweep", "--config", config, "--out", scaled, "--kbt", "2"]
    )
    assert result.success
    assert os.path.exists(scaled)
    assert os.path.exists(os.path.join(tmpdir, "scaled.meta.json"))


def test_sweep_errors(tmpdir, script_runner):
    config = os.path.join(tmpdir, "config.txt")

    # no output path
    with open(config, "w") as fp:
        fp.write("system = 2\nswept_parameter = omega_t\nswept_range = 0:1:3\n")
    result = script_runner.run(["optowork", "sweep", "--config", config])
    assert result.returncode == optowork.define.ExitCode.CONFIG_ERROR

    # unknown key
    with open(config, "w") as fp:
        fp.write("system = 2\nfoo = 1\n")
    result = script_runner.run(
        ["optowork", "sweep", "--config", config, "--out", "out.csv"],
        cwd=str(tmpdir),
    )
    assert result.returncode == optowork.define.ExitCode.CONFIG_ERROR

    # double homodyne work is undefined for these angles
    with open(config, "w") as fp:
        fp.write(
            "system = 2\n"
            "swept_parameter = omega_t\n"
            "swept_range = 3:3.141592653589793:2\n"
            "quantities = W00\n"
            "theta = 0\n"
            "phi = 0\n"
        )
    result = script_runner.run(
        ["optowork", "sweep", "--config", config, "--out", "out.csv"],
        cwd=str(tmpdir),
    )
    assert result.returncode == optowork.define.ExitCode.DOMAIN_ERROR
    assert "Row" in result.stderr
