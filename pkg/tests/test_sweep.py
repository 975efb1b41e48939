import json
import math
import os

import numpy as np
import pandas as pd
import pytest

import optowork


@pytest.fixture(scope="function")
def config():
    return optowork.SweepConfig(
        system=1,
        swept_parameter="n_th",
        swept_range=[0.0, 2.0, 5],
        fixed_parameters={"C": 34.0},
        quantities=["L_N_mirror", "W0", "W1_sep"],
        family_parameter="r",
        family_values=[0.5, 1.0],
    )


@pytest.mark.parametrize(
    "kwargs",
    [
        {"system": 3},
        {"swept_parameter": "x"},
        {"swept_range": [0.0, 1.0, 1]},
        {"swept_range": [1.0, 1.0, 5]},
        {"swept_range": [0.0, 1.0, 2.5]},
        {"swept_range": [0.0, 1.0]},
        {"swept_range": [-1.0, 1.0, 3]},
        {"fixed_parameters": {"n_th": 1.0}},
        {"fixed_parameters": {"foo": 1.0}},
        {"fixed_parameters": {"C": -1.0}},
        {"fixed_parameters": {"C": math.inf}},
        {"quantities": []},
        {"quantities": ["W2"]},
        {"quantities": ["W0", "W0"]},
        {"subsystem": "cavity"},
        {"family_parameter": "r"},
        {"family_values": [1.0]},
        {"family_parameter": "n_th", "family_values": [1.0]},
        {"family_parameter": "r", "family_values": []},
        {"theta": math.nan},
        {"kbt": 0.0},
        {"kbt": math.inf},
        {"system": 2, "swept_parameter": "omega_t", "quantities": ["L_N_mirror"]},
        {"system": 2, "swept_parameter": "omega_t", "subsystem": "mirror"},
        {"system": 2, "swept_parameter": "x", "swept_range": [0.5, 2.0, 3]},
    ],
)
def test_config_errors(kwargs):
    with pytest.raises(optowork.ConfigError):
        optowork.SweepConfig(**kwargs)


def test_config_defaults():
    c = optowork.SweepConfig()
    assert c.quantities == list(optowork.define.QUANTITIES)
    assert c.subsystem == "mirror"
    assert c.swept_range == [0.0, 5.0, optowork.config.DEFAULT_POINTS]
    c = optowork.SweepConfig(system=2, swept_parameter="omega_t")
    assert "L_N_mirror" not in c.quantities
    assert c.subsystem == "optic"


def test_config_grid():
    c = optowork.SweepConfig(swept_range=[5.0, 0.0, 3])
    assert c.grid().tolist() == [0.0, 2.5, 5.0]


def test_config_yaml(tmpdir, config):
    path = str(tmpdir.join("sweep.yaml"))
    config.to_yaml(path)
    c = optowork.parse_config_file(path)
    assert c == config
    assert c.fixed_parameters == {"C": 34.0}

    path = str(tmpdir.join("params.yaml"))
    optowork.system2_parameters().to_yaml(path)
    with pytest.raises(optowork.ConfigError):
        optowork.parse_config_file(path)


def test_parse_config_file(tmpdir):
    path = str(tmpdir.join("sweep.txt"))
    with open(path, "w") as fp:
        fp.write(
            "# mirror work versus cooperativity\n"
            "system = 1\n"
            "swept_parameter = C\n"
            "swept_range = 0:100:5  # inclusive\n"
            "\n"
            "fixed_parameters = r=1.5, gamma=0.05\n"
            "family_parameter = n_th\n"
            "family_values = 1, 2\n"
            "quantities = W0, W0_sep\n"
            "approximated = no\n"
            "output_path = out.csv\n"
        )
    c = optowork.parse_config_file(path)
    assert c.swept_parameter == "C"
    assert c.swept_range == [0.0, 100.0, 5]
    assert c.fixed_parameters == {"r": 1.5, "gamma": 0.05}
    assert c.family_values == [1.0, 2.0]
    assert c.quantities == ["W0", "W0_sep"]
    assert c.approximated is False
    assert c.output_path == "out.csv"
    assert c.columns == ["n_th", "C", "W0", "W0_sep"]


@pytest.mark.parametrize(
    "content",
    [
        "foo = 1\n",
        "system = 1\nsystem = 2\n",
        "system\n",
        "= 1\n",
        "swept_range = 0:5\n",
        "system = one\n",
        "approximated = maybe\n",
        "fixed_parameters = C:34\n",
        "swept_parameter = x\n",
    ],
)
def test_parse_config_file_errors(tmpdir, content):
    path = str(tmpdir.join("sweep.txt"))
    with open(path, "w") as fp:
        fp.write(content)
    with pytest.raises(optowork.ConfigError):
        optowork.parse_config_file(path)


def test_parse_config_file_missing(tmpdir):
    with pytest.raises(optowork.IoError):
        optowork.parse_config_file(str(tmpdir.join("missing.txt")))


def test_evaluate_point():
    values = optowork.evaluate_point(1, {"C": 34.0, "r": 1.0, "n_th": 1.0})
    assert list(values) == list(optowork.define.QUANTITIES)
    assert values["L_N_mirror"] == pytest.approx(1.0507, abs=1e-4)
    assert values["W1"] == pytest.approx(1.0380, abs=1e-4)
    assert values["W00"] == pytest.approx(values["W0"])

    scaled = optowork.evaluate_point(
        1,
        {"C": 34.0, "r": 1.0, "n_th": 1.0},
        kbt=2.0,
    )
    assert scaled["L_N_mirror"] == values["L_N_mirror"]
    assert scaled["W1"] == pytest.approx(2 * values["W1"])

    values = optowork.evaluate_point(
        2,
        {"x": 1.5, "omega_t": math.pi / 2},
        quantities=["W0", "W0_max"],
    )
    assert values["W0"] > 0
    assert values["W0_max"] is None


@pytest.mark.parametrize(
    "system, parameters, kwargs, error",
    [
        (3, None, {}, optowork.ConfigError),
        (2, {"C": 1.0}, {}, optowork.ConfigError),
        (2, None, {"quantities": ["L_N_mirror"]}, optowork.ConfigError),
        (1, None, {"subsystem": "cavity"}, optowork.ConfigError),
        (2, {"x": 0.5}, {}, ValueError),
        (1, {"n_th": "1"}, {}, TypeError),
        (1, None, {"kbt": -2.0}, optowork.DomainError),
        (1, None, {"kbt": 0.0}, optowork.DomainError),
        (1, None, {"kbt": math.nan}, optowork.DomainError),
        (1, None, {"kbt": math.inf}, optowork.DomainError),
        (1, {"r": 400.0}, {}, optowork.DomainError),
        (2, {"x": 1.001}, {}, optowork.DomainError),
    ],
)
def test_evaluate_point_errors(system, parameters, kwargs, error):
    with pytest.raises(error):
        optowork.evaluate_point(system, parameters, **kwargs)


def test_sweep(config):
    d = optowork.sweep(config)
    assert d.columns == ["r", "n_th", "L_N_mirror", "W0", "W1_sep"]
    assert len(d) == 10
    assert d.data["r"].tolist() == [0.5] * 5 + [1.0] * 5
    assert d.data["n_th"].tolist() == [0.0, 0.5, 1.0, 1.5, 2.0] * 2
    assert not d.data.isna().any().any()

    # row matches single point evaluation
    values = optowork.evaluate_point(
        1,
        {"C": 34.0, "r": 1.0, "n_th": 1.5},
        quantities=config.quantities,
    )
    row = d.data.iloc[8]
    for name, value in values.items():
        assert row[name] == value

    # entanglement decreases with thermal noise
    for r in config.family_values:
        values = d.data[d.data["r"] == r]["L_N_mirror"]
        assert values.is_monotonic_decreasing

    provenance = d.provenance
    assert provenance["id"] == config.id
    assert provenance["grid"]["count"] == 5
    assert provenance["grid"]["family"] == "r"
    assert provenance["undefined"] == {}
    assert provenance["approximated"] is False


@pytest.mark.parametrize("num_workers", [2, 5])
def test_sweep_workers(config, num_workers):
    expected = optowork.sweep(config, num_workers=1).data
    data = optowork.sweep(config, num_workers=num_workers).data
    pd.testing.assert_frame_equal(data, expected)


@pytest.mark.parametrize("num_workers", [0, -1, 1.5])
def test_sweep_workers_errors(config, num_workers):
    with pytest.raises(optowork.ConfigError):
        optowork.sweep(config, num_workers=num_workers)


def test_sweep_kbt():
    kwargs = {
        "system": 2,
        "swept_parameter": "omega_t",
        "swept_range": [0.0, math.pi, 3],
        "quantities": ["L_N_optic", "W1", "W11"],
    }
    d = optowork.sweep(optowork.SweepConfig(**kwargs))
    scaled = optowork.sweep(optowork.SweepConfig(kbt=0.5, **kwargs))
    np.testing.assert_allclose(scaled.data["W1"], 0.5 * d.data["W1"])
    np.testing.assert_allclose(scaled.data["W11"], 0.5 * d.data["W11"])
    np.testing.assert_equal(scaled.data["L_N_optic"], d.data["L_N_optic"])


def test_sweep_approximated():
    c = optowork.SweepConfig(
        system=2,
        swept_parameter="omega_t",
        swept_range=[0.0, 1.0, 3],
        quantities=["L_N_optic"],
        approximated=True,
    )
    with pytest.warns(RuntimeWarning, match="approximated"):
        d = optowork.sweep(c)
    assert d.provenance["approximated"] is True


def test_sweep_row_error():
    c = optowork.SweepConfig(
        system=2,
        swept_parameter="omega_t",
        swept_range=[3.0, math.pi, 2],
        quantities=["W00"],
        theta=0.0,
        phi=0.0,
    )
    with pytest.raises(optowork.DomainError, match="Row"):
        optowork.sweep(c)


def test_sweep_undefined(tmpdir):
    c = optowork.SweepConfig(
        system=2,
        swept_parameter="omega_t",
        swept_range=[0.0, math.pi / 2, 2],
        quantities=["W0_max"],
        description="maximum work",
    )
    with pytest.warns(RuntimeWarning, match="W0_max"):
        d = optowork.sweep(c)
    assert d.data["W0_max"].iloc[0] == 0.0
    assert math.isnan(d.data["W0_max"].iloc[1])
    assert d.provenance["undefined"] == {"W0_max": 1}

    path = os.path.join(tmpdir, "sub", "sweep.csv")
    optowork.emit_csv(d, path)
    with open(path) as fp:
        lines = fp.read().split("\n")
    assert lines == [
        "omega_t,W0_max",
        "0,0",
        "1.5707963267948966,",
        "",
    ]

    meta = optowork.metadata_path(path)
    assert meta == os.path.join(tmpdir, "sub", "sweep.meta.json")
    with open(meta) as fp:
        provenance = json.load(fp)
    assert sorted(provenance) == [
        "approximated",
        "config",
        "description",
        "grid",
        "id",
        "timestamp",
        "undefined",
        "version",
    ]
    assert provenance["description"] == "maximum work"
    assert provenance["id"] == c.id


def test_emit_csv_error(tmpdir, config):
    d = optowork.sweep(config)
    file = os.path.join(tmpdir, "file")
    with open(file, "w"):
        pass
    with pytest.raises(optowork.IoError):
        optowork.emit_csv(d, os.path.join(file, "sweep.csv"))
