import pytest

from edspower import Point, generate, make_curve_xb, mul


@pytest.fixture(scope="session")
def base_curve():
    return make_curve_xb(5)


@pytest.fixture(scope="session")
def base_point():
    return Point(20, 90)


@pytest.fixture(scope="session")
def base_seq(base_curve, base_point):
    # 24 terms; the heavy suites share this one generation pass
    return generate(base_curve, base_point, 24)


@pytest.fixture(scope="session")
def doubled_point(base_curve, base_point):
    return mul(base_curve, 2, base_point)


@pytest.fixture(scope="session")
def doubled_seq(base_curve, doubled_point):
    return generate(base_curve, doubled_point, 1)
