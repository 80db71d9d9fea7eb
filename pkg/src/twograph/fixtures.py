"""Named permutation fixtures used throughout the tests and the CLI.

Each entry is (m, n, relation rows [i, j, i2, j2]) meaning
theta(i, j) = (i2, j2), i.e. e_i f_j = f_{j2} e_{i2}.
"""

from __future__ import annotations

from .semigroup_core import Theta, validate_theta

# e1 f1 = f2 e1, e1 f2 = f1 e2, e2 f1 = f1 e1, e2 f2 = f2 e2
FORWARD_3CYCLE_ROWS = [
    [1, 1, 1, 2],
    [1, 2, 2, 1],
    [2, 1, 1, 1],
    [2, 2, 2, 2],
]

# the 3-cycle run the other way; (2,2) is again a fixed point
REVERSE_3CYCLE_ROWS = [
    [1, 1, 2, 1],
    [2, 1, 1, 2],
    [1, 2, 1, 1],
    [2, 2, 2, 2],
]

# flip semigroup: e_i f_j = f_i e_j
FLIP_22_ROWS = [
    [1, 1, 1, 1],
    [1, 2, 2, 1],
    [2, 1, 1, 2],
    [2, 2, 2, 2],
]

# product semigroup F2+ x F2+
IDENTITY_22_ROWS = [
    [1, 1, 1, 1],
    [1, 2, 1, 2],
    [2, 1, 2, 1],
    [2, 2, 2, 2],
]

# 3x3 permutation made of the two 2-cycles ((1,2),(2,1)) and fixed points:
# e1 f2 = f1 e2, e2 f1 = f2 e1, everything else commutes
TWO_SWAPS_33_ROWS = [
    [1, 1, 1, 1],
    [1, 2, 2, 1],
    [1, 3, 1, 3],
    [2, 1, 1, 2],
    [2, 2, 2, 2],
    [2, 3, 2, 3],
    [3, 1, 3, 1],
    [3, 2, 3, 2],
    [3, 3, 3, 3],
]

FIXTURE_ROWS: dict[str, tuple[int, int, list[list[int]]]] = {
    "forward3": (2, 2, FORWARD_3CYCLE_ROWS),
    "reverse3": (2, 2, REVERSE_3CYCLE_ROWS),
    "flip22": (2, 2, FLIP_22_ROWS),
    "identity22": (2, 2, IDENTITY_22_ROWS),
    "twoswaps33": (3, 3, TWO_SWAPS_33_ROWS),
}


def fixture_theta(name: str) -> Theta:
    m, n, rows = FIXTURE_ROWS[name]
    return validate_theta(rows, m, n)


def all_fixtures() -> dict[str, Theta]:
    return {name: fixture_theta(name) for name in FIXTURE_ROWS}


FORWARD_3CYCLE = fixture_theta("forward3")
REVERSE_3CYCLE = fixture_theta("reverse3")
FLIP_22 = fixture_theta("flip22")
IDENTITY_22 = fixture_theta("identity22")
TWO_SWAPS_33 = fixture_theta("twoswaps33")
