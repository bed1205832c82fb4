import pytest

from spinlift import make_metric, representation


@pytest.fixture(scope="session")
def g():
    return make_metric()


@pytest.fixture(scope="session")
def g_alt():
    return make_metric("mppp")


@pytest.fixture(scope="session", params=["gamma", "regular"])
def rep(request, g):
    return representation(request.param, g)
