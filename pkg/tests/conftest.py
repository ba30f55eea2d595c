import pytest

from kgraphs import families


@pytest.fixture
def fan3():
    return families.fan_3color()


@pytest.fixture
def one_vertex_3x3():
    return families.one_vertex_3x3()


@pytest.fixture
def one_vertex_3x2():
    return families.one_vertex_3x2()


@pytest.fixture
def cycle4():
    return families.cycle_pullback()


@pytest.fixture
def arrow():
    return families.arrow_pullback()


@pytest.fixture
def loop_pair_tail():
    return families.loop_pair_tail()


@pytest.fixture
def looptail():
    return families.looptail()


@pytest.fixture
def grid2():
    return families.grid(2)


@pytest.fixture
def bratteli():
    return families.rank2_bratteli()
