import pytest

import trigen as tg


@pytest.fixture(scope="session")
def k_sqrt2():
    return tg.field_new([-2, 0, 1], name="sqrt2")


@pytest.fixture(scope="session")
def k_sqrt3():
    return tg.field_new([-3, 0, 1], name="sqrt3")


@pytest.fixture(scope="session")
def k_sqrt5_maximal():
    return tg.field_new([-5, 0, 1],
                        integral_basis=[["1", "0"], ["1/2", "1/2"]],
                        name="sqrt5")


@pytest.fixture(scope="session")
def k_gauss():
    return tg.field_new([1, 0, 1], name="i")


@pytest.fixture(scope="session")
def k_zeta8():
    return tg.field_new([1, 0, 0, 0, 1], name="zeta8")


@pytest.fixture(scope="session")
def k_phi10():
    return tg.field_new([1, -1, 1, -1, 1], name="phi10")


@pytest.fixture(scope="session")
def k_biquad():
    # Q(sqrt2, sqrt3) via the minimal polynomial of sqrt2 + sqrt3
    return tg.field_new([1, 0, -10, 0, 1], name="biquad")


@pytest.fixture(scope="session")
def k_rationals():
    return tg.field_new([0, 1], name="Q")


@pytest.fixture(scope="session")
def theta_sqrt2(k_sqrt2):
    return tg.select_theta(k_sqrt2, tg.UnitSource("pell"), r_max=12)


@pytest.fixture(scope="session")
def zeta8_subfield(k_zeta8):
    sub = tg.field_new([-2, 0, 1])
    return tg.SubfieldEmbedding(sub, k_zeta8, k_zeta8.element([0, 1, 0, -1]))
