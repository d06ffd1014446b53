import pytest

from cofrig.cofactor import CofactorOracle


@pytest.fixture(scope="session")
def oracle6():
    return CofactorOracle(6)


@pytest.fixture(scope="session")
def table6(oracle6):
    """Oracle ranks of all 32768 subsets of E(K6), indexed by edge mask."""
    return oracle6.rank_table()


@pytest.fixture(scope="session")
def oracle7():
    return CofactorOracle(7)


@pytest.fixture(scope="session")
def oracle8():
    return CofactorOracle(8)
