import pytest

from groupexplain import load_builtin


@pytest.fixture(scope="session")
def dataset():
    return load_builtin()


@pytest.fixture(scope="session")
def g1(dataset):
    return dataset.groups["g1"]
