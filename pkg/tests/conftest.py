import pytest

from psp4nse import oracle


@pytest.fixture(scope="session")
def sp44():
    """The fully enumerated Sp4(4); shared across the suite (one enumeration)."""
    return oracle.sp4_group(4)


@pytest.fixture(scope="session")
def sp44_hist(sp44):
    return oracle.order_histogram(sp44)


@pytest.fixture(scope="session")
def hist84_g():
    return oracle.perm_nse(oracle.z4_times_z7_z3())


@pytest.fixture(scope="session")
def hist84_h():
    return oracle.perm_nse(oracle.z3_times_z7_z4())
