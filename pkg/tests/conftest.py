from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from twocrossed.corpus import fixtures

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fx():
    return fixtures()
