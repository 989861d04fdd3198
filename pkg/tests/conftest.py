import numpy as np
import pytest

from driftscan.synth import DriftScenario, generate


@pytest.fixture(scope="session")
def small_scenario():
    return DriftScenario(
        numeric_features=4, categorical_features=2, days=12, rows_per_day=120, seed=5
    )


@pytest.fixture(scope="session")
def small_data(small_scenario):
    reference, evaluation, schema = generate(small_scenario)
    return reference, evaluation, schema


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
