import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from ndgtool.scalars import cyclotomic_field, prime_field

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def f7():
    return prime_field(7, 3)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


FIELDS = [("F7,N=3", lambda: prime_field(7, 3)), ("F5,N=2", lambda: prime_field(5, 2)),
          ("F13,N=4", lambda: prime_field(13, 4)), ("Q(z3)", lambda: cyclotomic_field(3)),
          ("Q(z4)", lambda: cyclotomic_field(4))]


@pytest.fixture(params=[f for _, f in FIELDS], ids=[n for n, _ in FIELDS])
def field(request):
    return request.param()


_ACCEPTANCE = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key, title, passed, detail in sorted(_ACCEPTANCE, key=lambda r: (int(r[0].rstrip('b')), r[0])):
        terminalreporter.write_line(
            f"criterion {key:<4} {'PASS' if passed else 'FAIL'}  {title}: {detail}")
