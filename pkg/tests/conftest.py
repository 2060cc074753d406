import numpy as np
import pytest
from hypothesis import settings

from isocd import fixtures

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def e4():
    return fixtures.load("e4")


@pytest.fixture
def e6_pair():
    return fixtures.load("e6_m1"), fixtures.load("e6_m2")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
