import random
from fractions import Fraction

import pytest

from ybops.algebra import cubic_algebra, quadratic_algebra


@pytest.fixture
def A0():
    return quadratic_algebra(0)


@pytest.fixture
def A1():
    return quadratic_algebra(1)


@pytest.fixture(params=[0, 1], ids=["sigma0", "sigma1"])
def Aq(request):
    return quadratic_algebra(request.param)


@pytest.fixture(params=[(0, 0), (2, 5), (1, 0)],
                ids=["eps0rho0", "eps2rho5", "eps1rho0"])
def Bc(request):
    eps, rho = request.param
    return cubic_algebra(eps, rho)


def rand_fraction(rng, lo=-9, hi=9, den=5, nonzero=False):
    while True:
        f = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if not (nonzero and f == 0):
            return f


@pytest.fixture
def rng():
    return random.Random(20240817)
