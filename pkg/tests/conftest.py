import pytest

import oracles


@pytest.fixture(scope="session")
def bank():
    """spec string -> cached (algebra, solved integral data)."""
    return oracles.bank


@pytest.fixture(scope="session")
def kp(bank):
    return bank("kac-paljutkin")
