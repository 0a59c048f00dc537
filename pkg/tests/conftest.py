import random
from fractions import Fraction

import pytest

from crossedprod.dynsys import (
    GOLDEN_CONJUGATE, FiniteSystem, RotationSystem, ShiftSystem, UnionSystem,
)


@pytest.fixture
def cycle3():
    return FiniteSystem(3, (1, 2, 0))


@pytest.fixture
def swap_fix():
    # 0 <-> 1, 2 fixed
    return FiniteSystem(3, (1, 0, 2))


@pytest.fixture
def perm23():
    # one 2-cycle and one 3-cycle
    return FiniteSystem(5, (1, 0, 3, 4, 2))


@pytest.fixture
def perm1235():
    # orbits of periods 1, 2, 3 and 5 on 11 points
    return FiniteSystem(11, (0, 2, 1, 4, 5, 3, 7, 8, 9, 10, 6))


@pytest.fixture
def shift():
    return ShiftSystem()


@pytest.fixture
def golden_rotation():
    return RotationSystem(GOLDEN_CONJUGATE)


@pytest.fixture
def rational_rotation():
    return RotationSystem(Fraction(1, 3), irrational=False)


@pytest.fixture
def shift_union_cycle3(cycle3):
    return UnionSystem((ShiftSystem(), cycle3))


@pytest.fixture
def rng():
    return random.Random(12345)
