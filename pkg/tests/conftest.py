import numpy as np
import pytest

from framerep import gen_frame, make_frame


@pytest.fixture
def psi1():
    """Redundant frame {(1,0), (0,1), (1,1)} of C^2: three vectors, bounds (1, 3)."""
    return make_frame(2, [(1, 0), (0, 1), (1, 1)])


@pytest.fixture
def onb2():
    return gen_frame("onb", dim=2)


@pytest.fixture
def onb3():
    return gen_frame("onb", dim=3)


@pytest.fixture
def mercedes():
    return gen_frame("mercedes")


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
