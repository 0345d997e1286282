import pytest
from hypothesis import HealthCheck, settings

from walkup import catalog

settings.register_profile(
    "suite", deadline=None, max_examples=40, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")

FIVE_COMPLEXES = ("A5_21", "B5_21", "B5_26", "A5_41")
FOUR_MANIFOLDS = ("M4_21", "N4_21", "N4_26", "M4_41")


@pytest.fixture(scope="session")
def five_complexes():
    return {name: catalog.get(name) for name in FIVE_COMPLEXES}


@pytest.fixture(scope="session")
def four_manifolds():
    return {name: catalog.get(name) for name in FOUR_MANIFOLDS}
