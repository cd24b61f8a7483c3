import pytest

from virtmorse.analysis import analyze


@pytest.fixture(scope="session")
def xi1():
    return analyze("XI1")


@pytest.fixture(scope="session")
def xi2():
    return analyze("XI2")


@pytest.fixture(scope="session")
def both(xi1, xi2):
    return {"XI1": xi1, "XI2": xi2}
