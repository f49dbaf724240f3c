import pytest

from semitruss import (
    FiniteBinaryOp,
    TrussFilter,
    chain_meet_semilattice,
    cyclic_group,
    enumerate_semigroups,
    enumerate_semitrusses,
    left_zero,
    right_zero,
)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def right2():
    return right_zero(2)


@pytest.fixture(scope="session")
def leftz2():
    return left_zero(2)


@pytest.fixture(scope="session")
def meet2():
    return chain_meet_semilattice(2)


@pytest.fixture(scope="session")
def or2():
    return FiniteBinaryOp.from_rows([[0, 1], [1, 1]])


@pytest.fixture(scope="session")
def nand2():
    return FiniteBinaryOp.from_rows([[1, 0], [0, 0]])


@pytest.fixture(scope="session")
def const0_2():
    return FiniteBinaryOp.from_rows([[0, 0], [0, 0]])


@pytest.fixture(scope="session")
def semigroups():
    """All semigroups for n = 1..3, in enumeration order."""
    return {n: list(enumerate_semigroups(n)) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def semigroups4():
    return list(enumerate_semigroups(4, allow_order_four=True))


@pytest.fixture(scope="session")
def lc_trusses():
    """Semi-trusses with left-cancellative diamond, n = 1..3."""
    filt = TrussFilter(diamond_left_cancellative=True)
    return {n: list(enumerate_semitrusses(n, filt)) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def inverse_trusses():
    """Semi-trusses with inverse-semigroup diamond, n = 1..3."""
    filt = TrussFilter(diamond_inverse=True)
    return {n: list(enumerate_semitrusses(n, filt)) for n in (1, 2, 3)}
