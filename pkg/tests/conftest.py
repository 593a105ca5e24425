import pytest

from singquandles import corpus, kernels


@pytest.fixture(scope="session")
def xz4():
    return corpus.load("X-Z4")


@pytest.fixture(scope="session")
def yz4():
    return corpus.load("Y-Z4")


@pytest.fixture(scope="session")
def xz8a():
    return corpus.load("X-Z8-a")


@pytest.fixture(scope="session")
def xz8b():
    return corpus.load("X-Z8-b")


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    """Run the test once per compiled backend."""
    before = kernels.active_backend()
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(before)
