import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from cqgkit.algebras import function_algebra, group_algebra, sweedler_algebra
from cqgkit.groups import cyclic_group, cyclic_square, symmetric_group

settings.register_profile("cqg", max_examples=25, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("cqg")


@pytest.fixture(scope="session")
def CC2():
    return group_algebra(cyclic_group(2))


@pytest.fixture(scope="session")
def CC3():
    return group_algebra(cyclic_group(3))


@pytest.fixture(scope="session")
def CS3():
    return group_algebra(symmetric_group(3))


@pytest.fixture(scope="session")
def FC4():
    return function_algebra(cyclic_group(4))


@pytest.fixture(scope="session")
def FS3():
    return function_algebra(symmetric_group(3))


@pytest.fixture(scope="session")
def FK4():
    return function_algebra(cyclic_square(2))


@pytest.fixture(scope="session")
def sweedler():
    return sweedler_algebra()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
