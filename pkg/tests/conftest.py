import pytest
from hypothesis import HealthCheck, settings

from qmod.fields import QQ, DEFAULT_PRIME, PrimeField

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def fp():
    return PrimeField(DEFAULT_PRIME)


@pytest.fixture(scope="session")
def qq():
    return QQ
