import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from detcalc import BundleSpec, Instance, VirtualPair
from detcalc.chow import projective_space


@pytest.fixture(scope="session")
def p4():
    return projective_space(4)


@pytest.fixture()
def quintic(p4):
    """Rank-4 pair whose determinant cuts a nodal quintic threefold."""
    E = BundleSpec.sum_of_line_bundles(p4, [[-1], [-1], [-1], [-2]])
    F = BundleSpec.sum_of_line_bundles(p4, [[0], [0], [0], [0]])
    return Instance(p4, VirtualPair(E, F), p4.generator(0))


@pytest.fixture()
def quartic(p4):
    """Rank-2 pair whose determinant cuts a 16-node quartic threefold."""
    E = BundleSpec.sum_of_line_bundles(p4, [[0], [0]])
    F = BundleSpec.sum_of_line_bundles(p4, [[2], [2]])
    return Instance(p4, VirtualPair(E, F), p4.generator(0))


QUARTIC_TABLE_ROWS = [
    ([[0], [0]], [[1], [3]], 9),
    ([[-1], [0]], [[1], [2]], 12),
    ([[0], [0], [0]], [[1], [1], [2]], 17),
    ([[0], [0]], [[2], [2]], 16),
    ([[0], [0], [0], [0]], [[1], [1], [1], [1]], 20),
]


@pytest.fixture()
def quartic_table(p4):
    out = []
    for e_rows, f_rows, odps in QUARTIC_TABLE_ROWS:
        pair = VirtualPair(
            BundleSpec.sum_of_line_bundles(p4, e_rows),
            BundleSpec.sum_of_line_bundles(p4, f_rows),
        )
        out.append((Instance(p4, pair), odps))
    return out
