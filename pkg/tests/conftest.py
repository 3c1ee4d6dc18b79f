import pytest

from hybridweyl import build_root_system


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A2")


@pytest.fixture(scope="session")
def b2():
    return build_root_system("B2")


@pytest.fixture(scope="session")
def b3():
    return build_root_system("B3")


@pytest.fixture(scope="session")
def c2():
    return build_root_system("C2")


@pytest.fixture(scope="session")
def c3():
    return build_root_system("C3")


@pytest.fixture(scope="session")
def f4():
    return build_root_system("F4")


@pytest.fixture(scope="session")
def g2():
    return build_root_system("G2")
