import pytest

from ternwords import builtin_pair


@pytest.fixture(scope="session")
def builtin():
    return builtin_pair()
