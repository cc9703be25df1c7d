import pytest

from algebra import clifford, default_basis, octonion, parse_basis


@pytest.fixture(scope="session")
def plane():
    """Paravectors of clifford(2): x = x0 + x1 e1 + x2 e2."""
    return default_basis(clifford(2))


@pytest.fixture(scope="session")
def cl3():
    return default_basis(clifford(3))


@pytest.fixture(scope="session")
def quaternions():
    return parse_basis(clifford(2), "1,e1,e2,e12")


@pytest.fixture(scope="session")
def octonions():
    return default_basis(octonion())
