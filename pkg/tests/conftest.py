import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("liegamma", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("liegamma")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)



def pytest_terminal_summary(terminalreporter):
    # One line per acceptance criterion, recorded by tests/test_acceptance.py.
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for key in sorted(results, key=lambda k: int(k[1:])):
            terminalreporter.write_line(results[key])
