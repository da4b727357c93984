from dataclasses import dataclass

import pytest

from cyclotome import (
    CharSystem,
    CodeParams,
    FieldTower,
    TheoremCase,
    build_code,
    build_tower,
    classify,
)


@dataclass(frozen=True)
class DeskSet:
    """One fully-built desk-scale parameter set shared across tests."""

    tower: FieldTower
    params: CodeParams
    case: TheoremCase
    system: CharSystem


def _desk(p: int, s: int, m: int, h: int) -> DeskSet:
    tower = build_tower(p, s, m)
    params = build_code(tower, h, 3)
    case = classify(params)
    assert isinstance(case, TheoremCase)
    return DeskSet(tower, params, case, CharSystem(tower, params.N))


@pytest.fixture(scope="session")
def set1() -> DeskSet:
    """(7,1,2,h=3): r = 49, N = 2, case 2.1."""
    return _desk(7, 1, 2, 3)


@pytest.fixture(scope="session")
def set2() -> DeskSet:
    """(2,2,3,h=3): r = 64, N = 3, case 2.2."""
    return _desk(2, 2, 3, 3)


@pytest.fixture(scope="session")
def set3() -> DeskSet:
    """(13,1,2,h=3): r = 169, N = 2, case 1.1."""
    return _desk(13, 1, 2, 3)


# expected values pinned from the naive reference implementations in
# naive_oracle.py (poly arithmetic only, no shared code with the package)

DIST1 = {0: 1, 12: 72, 16: 72, 18: 264, 20: 864, 22: 864, 24: 264}
DIST2 = {0: 1, 30: 126, 36: 252, 42: 756, 48: 1827, 54: 1134}

PERIOD_COUNTS1 = [[6, 3, 3, 3, 3, 3, 3], [0, 4, 4, 4, 4, 4, 4]]
PERIODS1 = [3, -4]
PERIOD_COUNTS2 = [[13, 8], [9, 12], [9, 12]]
PERIODS2 = [5, -3, -3]

F_TABLE1 = {
    (0, 0, 0): 264, (0, 0, 1): 288, (0, 1, 0): 288, (0, 1, 1): 288,
    (1, 0, 0): 288, (1, 0, 1): 288, (1, 1, 0): 288, (1, 1, 1): 264,
}

F_TABLE2 = {c: 126 for c in [(a, b, d) for a in range(3) for b in range(3) for d in range(3)]}
F_TABLE2.update({c: 189 for c in [(0, 0, 0), (0, 1, 2), (1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 2, 2)]})
F_TABLE2.update({c: 168 for c in [(0, 2, 1), (1, 0, 2), (2, 1, 0)]})
