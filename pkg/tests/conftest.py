import pytest

from selfcent import core, families


@pytest.fixture(scope="session")
def q8():
    return families.generalized_quaternion(8)


@pytest.fixture(scope="session")
def s3():
    return families.symmetric(3)


@pytest.fixture(scope="session")
def d12():
    """C2 x S3; S3 occupies indices 0..5 and the central involution is 6."""
    return core.direct_product(families.cyclic(2), families.symmetric(3), "D12")


@pytest.fixture(scope="session")
def heis3():
    return families.heisenberg(3)

