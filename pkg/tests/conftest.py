import pytest
from hypothesis import HealthCheck, settings

import closurespaces as cs

settings.register_profile(
    "suite", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@pytest.fixture
def d2():
    """Two points, identity closure."""
    return cs.make_space(cs.ground(2), [0, 1, 2, 3])


@pytest.fixture
def i2():
    """Two points, constant-full closure."""
    return cs.make_space(cs.ground(2), [3, 3, 3, 3])


@pytest.fixture
def c2():
    """Two points, identity except the full set closes to nothing."""
    return cs.make_space(cs.ground(2), [0, 1, 2, 0])


@pytest.fixture
def p1():
    """One point, identity closure."""
    return cs.make_space(cs.ground(1), [0, 1])
