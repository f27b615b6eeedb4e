import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gradedquot.catalog import build
from gradedquot.fields import GF, QQ

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=150, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

F5 = GF(5)


def fp_vectors(p, n, min_size=0, max_size=4):
    field = GF(p)
    vec = st.lists(st.integers(0, p - 1), min_size=n, max_size=n).map(lambda v: tuple(field(x) for x in v))
    return st.lists(vec, min_size=min_size, max_size=max_size)


def q_vectors(n, min_size=0, max_size=4):
    scal = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    vec = st.lists(scal, min_size=n, max_size=n).map(tuple)
    return st.lists(vec, min_size=min_size, max_size=max_size)


@pytest.fixture(scope="session")
def catalog():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = build(name)
        return cache[name]
    return get


@pytest.fixture
def qq():
    return QQ


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # keep the call-phase report so fixtures can see the real outcome at teardown
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
