import pytest

from pmcubic.maps import RootedMap, enumerate_rooted_cubic_maps, is_three_connected


@pytest.fixture
def theta():
    """Two vertices joined by three parallel edges."""
    return RootedMap.from_cycles([(0, 2, 4), (1, 5, 3)])


@pytest.fixture
def dumbbell():
    """Two loops joined by a bridge; rooted on the bridge."""
    return RootedMap.from_cycles([(0, 2, 3), (1, 4, 5)])


@pytest.fixture
def k4():
    return next(m for m in enumerate_rooted_cubic_maps(2) if is_three_connected(m))
