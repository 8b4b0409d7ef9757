import pytest
from hypothesis import HealthCheck, settings

from lforge.config import Config, set_config

settings.register_profile(
    "lforge",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("lforge")


@pytest.fixture(autouse=True)
def default_config():
    """Every test starts from the default configuration."""
    previous = set_config(Config())
    yield
    set_config(previous)


# filled by test_acceptance so the per-criterion lines land in the run summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
