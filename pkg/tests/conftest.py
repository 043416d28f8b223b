import pytest

from blmp.io import data_path, read_placement_file, read_probes_file
from blmp.model import Placement, ProbeSet

EXAMPLE_PROBES = (
    "CGATT", "GGGCC", "ATCGA", "ATGTC", "TTAGT", "ACCAG", "CCCGA", "AATTC",
    "ATACG", "CCCTC", "GGAGA", "AGCCG", "AGACA", "ACCTA", "GAATC", "GATTT",
)

# Hand-checked distances between EXAMPLE_PROBES, upper triangle: entry i lists d(p_i, p_j) for j > i.
EXAMPLE_DISTANCES = {
    1: [4, 5, 4, 3, 5, 4, 4, 4, 3, 3, 4, 3, 4, 3, 3],
    2: [5, 3, 5, 5, 5, 4, 4, 4, 3, 3, 3, 5, 3, 4],
    3: [3, 3, 3, 2, 4, 3, 4, 3, 3, 3, 2, 5, 5],
    4: [4, 4, 5, 2, 3, 3, 5, 4, 4, 3, 3, 4],
    5: [5, 4, 5, 3, 5, 3, 5, 4, 5, 4, 4],
    6: [3, 4, 3, 3, 5, 2, 4, 2, 5, 5],
    7: [5, 5, 2, 3, 4, 4, 2, 5, 5],
    8: [4, 3, 5, 4, 4, 3, 2, 2],
    9: [5, 4, 2, 2, 4, 4, 5],
    10: [5, 4, 5, 2, 3, 4],
    11: [4, 2, 4, 3, 4],
    12: [2, 3, 5, 5],
    13: [3, 4, 5],
    14: [4, 4],
    15: [2],
}


def ref_distance(i: int, j: int) -> int:
    if i == j:
        return 0
    i, j = min(i, j), max(i, j)
    return EXAMPLE_DISTANCES[i][j - i - 1]


@pytest.fixture
def example_sp() -> ProbeSet:
    return ProbeSet(4, 5, EXAMPLE_PROBES)


@pytest.fixture
def row_major16() -> Placement:
    return Placement.row_major(4)


@pytest.fixture
def tiny_sp() -> ProbeSet:
    return ProbeSet(2, 5, EXAMPLE_PROBES[:4])


@pytest.fixture
def shipped_example():
    sp = read_probes_file(data_path("example16.probes"))
    return sp, read_placement_file(data_path("example16.placement"), sp)
