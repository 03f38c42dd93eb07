from fractions import Fraction

import pytest

from opde.families import AppellParams, appell_pde
from opde.monic import build_monic


@pytest.fixture(scope="session")
def p11():
    return AppellParams(Fraction(1), Fraction(1))


@pytest.fixture(scope="session")
def p23():
    return AppellParams(Fraction(2), Fraction(3))


@pytest.fixture(scope="session")
def fam11(p11):
    return build_monic(appell_pde(p11), 9)


@pytest.fixture(scope="session")
def fam23(p23):
    return build_monic(appell_pde(p23), 9)
