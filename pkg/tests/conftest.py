import math

import pytest

import optowork


pytest.RANDOM_FORMS = optowork.random_standard_forms(200, seed=0)

pytest.SYSTEM1_POINTS = [
    optowork.System1Params(kappa=1.0, gamma=gamma, C=C, r=r, n_th=n_th)
    for gamma in [0.05, 0.2]
    for C in [1.0, 34.0, 68.0]
    for r in [0.0, 1.0, 2.0]
    for n_th in [0.0, 2.0]
]

pytest.SYSTEM2_POINTS = [
    optowork.System2Params(x=x, omega_t=omega_t)
    for x in [1.1, 1.5, 5.0]
    for omega_t in [0.0, 0.3, math.pi / 2, math.pi, 5.0]
]

pytest.HOMODYNE = optowork.define.MeasurementKind.HOMODYNE
pytest.HETERODYNE = optowork.define.MeasurementKind.HETERODYNE


@pytest.fixture(scope="function", autouse=True)
def restore_config():
    num_workers = optowork.config.NUM_WORKERS
    yield
    optowork.config.NUM_WORKERS = num_workers
