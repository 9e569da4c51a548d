"""Session fixtures: the small towers and the worked curve instances."""

import pytest
from hypothesis import settings

from maxcurves import build_tower, define_curve, hermitian_curve

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def t2():
    return build_tower(2, 1)


@pytest.fixture(scope="session")
def t3():
    return build_tower(3, 1)


@pytest.fixture(scope="session")
def t4():
    return build_tower(2, 2)


@pytest.fixture(scope="session")
def t5():
    return build_tower(5, 1)


@pytest.fixture(scope="session")
def t7():
    return build_tower(7, 1)


@pytest.fixture(scope="session")
def t16():
    """q = 16; the largest tower the suite touches."""
    return build_tower(2, 4)


@pytest.fixture(scope="session")
def h32(t2):
    """y^2 + y = x^3 over F_4, genus 1, 9 rational points."""
    return hermitian_curve(t2, 3)


@pytest.fixture(scope="session")
def h23(t3):
    """y^3 + y = x^2 over F_9, genus 1, 16 rational points."""
    return hermitian_curve(t3, 2)


@pytest.fixture(scope="session")
def h43(t3):
    """y^3 + y = x^4 over F_9, genus 3; the full norm-trace case m = q + 1."""
    return hermitian_curve(t3, 4)


@pytest.fixture(scope="session")
def h25(t5):
    """y^5 + y = x^2 over F_25, genus 2, 46 rational points."""
    return hermitian_curve(t5, 2)


@pytest.fixture(scope="session")
def h35(t5):
    """y^5 + y = x^3 over F_25, genus 4, 66 rational points."""
    return hermitian_curve(t5, 3)


@pytest.fixture(scope="session")
def add45(t4):
    """y^2 + y = x^5 over F_16; additive left side of degree 2 < q."""
    return define_curve(t4, (1, 1), 5)


@pytest.fixture(scope="session")
def nonmax(t3):
    """y^3 + y = x^7 over F_9: valid model, far from maximal (10 points)."""
    return define_curve(t3, (1, 1), 7)
