import pytest

from adereduce import RootSystem, root_system

#: Every irreducible type of rank at most 8
SMALL_TYPES = (
    [f"A{n}" for n in range(1, 9)] + [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8"]
)

#: The irreducible types small enough for whole-group searches
RANK_SIX_TYPES = [f"A{n}" for n in range(1, 7)] + ["D4", "D5", "D6", "E6"]


@pytest.fixture(scope="session")
def a2() -> RootSystem:
    return root_system("A2")


@pytest.fixture(scope="session")
def a3() -> RootSystem:
    return root_system("A3")


@pytest.fixture(scope="session")
def e6() -> RootSystem:
    # The lattice levels are cached on the root system, so build it once
    return root_system("E6")
