import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blmp.model import (
    InvalidInputError,
    Location,
    Placement,
    Probe,
    ProbeSet,
    apply_swap,
    hamming,
    neighbor_locations,
    pair_local_cost,
    random_placement,
    swap_delta,
    total_cost,
)
from blmp.oracle import generate_probeset
from blmp.rng import Stream

from conftest import EXAMPLE_PROBES, ref_distance

probes = st.text(alphabet="ACGT", min_size=6, max_size=6)


def naive_cost(sp, pl):
    """Score straight from the sequences, one neighbor pair at a time."""
    g = pl.grid
    d = sp.dim
    s = 0
    for r in range(d):
        for c in range(d):
            here = sp.probes[g[r, c] - 1]
            if c + 1 < d:
                s += sum(x != y for x, y in zip(here, sp.probes[g[r, c + 1] - 1]))
            if r + 1 < d:
                s += sum(x != y for x, y in zip(here, sp.probes[g[r + 1, c] - 1]))
    return s


def test_hamming_examples():
    assert hamming("CGATT", "GGGCC") == 4
    assert hamming("ACCAG", "ACCAG") == 0
    assert hamming("GAATC", "GATTT") == 2


def test_hamming_length_mismatch():
    with pytest.raises(InvalidInputError):
        hamming("ACG", "AC")


def test_distance_matrix_matches_table(example_sp):
    d = example_sp.distances
    for i, j in itertools.combinations(range(1, 17), 2):
        assert d[i - 1, j - 1] == ref_distance(i, j) == hamming(EXAMPLE_PROBES[i - 1], EXAMPLE_PROBES[j - 1])


@given(probes, probes, probes)
def test_hamming_metric(a, b, c):
    assert hamming(a, b) == hamming(b, a)
    assert hamming(a, c) <= hamming(a, b) + hamming(b, c)
    assert 0 <= hamming(a, b) <= 6


def test_probe_rejects_bad_symbols():
    with pytest.raises(InvalidInputError):
        Probe("ACGU")


def test_probeset_validates():
    with pytest.raises(InvalidInputError):
        ProbeSet(2, 5, EXAMPLE_PROBES[:3])
    with pytest.raises(InvalidInputError):
        ProbeSet(2, 5, ("ACGTA", "ACGTA", "ACGTA", "ACGT"))


@pytest.mark.parametrize("loc, expected", [
    ((1, 1), [(2, 1), (1, 2)]),
    ((2, 2), [(1, 2), (3, 2), (2, 1), (2, 3)]),
    ((1, 3), [(2, 3), (1, 2), (1, 4)]),
])
def test_neighbor_locations(loc, expected):
    assert neighbor_locations(4, Location(*loc)) == [Location(*e) for e in expected]


def test_neighbor_locations_out_of_bounds():
    with pytest.raises(InvalidInputError):
        neighbor_locations(4, (5, 1))


def test_total_cost_example(example_sp, row_major16):
    assert total_cost(example_sp, row_major16) == 85


def test_total_cost_single_cell():
    sp = ProbeSet(1, 3, ("ACG",))
    assert total_cost(sp, Placement.row_major(1)) == 0


def test_total_cost_tiny(tiny_sp):
    expected = ref_distance(1, 2) + ref_distance(3, 4) + ref_distance(1, 3) + ref_distance(2, 4)
    assert expected == 15
    assert total_cost(tiny_sp, Placement.row_major(2)) == 15


@pytest.mark.parametrize("a, b, expected", [
    ((1, 1), (4, 3), (16, 17)),
    ((3, 3), (1, 1), (22, 20)),
    ((4, 2), (1, 4), (14, 15)),
])
def test_pair_local_cost_example(example_sp, row_major16, a, b, expected):
    assert pair_local_cost(example_sp, row_major16, a, b) == expected


def test_pair_local_cost_rejects_same_location(example_sp, row_major16):
    with pytest.raises(InvalidInputError):
        pair_local_cost(example_sp, row_major16, (2, 2), (2, 2))


def test_swap_delta_examples(example_sp, row_major16):
    assert swap_delta(example_sp, row_major16, (3, 3), (1, 1)) == -2
    # state after the first three steps of the worked example
    pl = apply_swap(row_major16, (3, 3), (1, 1))
    pl = apply_swap(pl, (1, 2), (4, 1))
    pl = apply_swap(pl, (4, 2), (1, 2))
    assert pair_local_cost(example_sp, pl, (1, 4), (2, 4)) == (16, 17)
    assert swap_delta(example_sp, pl, (1, 4), (2, 4)) == 1
    after = apply_swap(pl, (1, 4), (2, 4))
    assert naive_cost(example_sp, after) - naive_cost(example_sp, pl) == 1


def test_swap_delta_identical_content():
    sp = ProbeSet(2, 4, ("ACGT", "ACGT", "TTTT", "GGGG"))
    pl = Placement.row_major(2)
    assert swap_delta(sp, pl, (1, 1), (1, 2)) == 0


def test_apply_swap(example_sp, row_major16):
    pl = apply_swap(row_major16, (3, 3), (1, 1))
    assert pl[Location(1, 1)] == 11 and pl[Location(3, 3)] == 1
    assert apply_swap(pl, (3, 3), (1, 1)) == row_major16
    assert row_major16 == Placement.row_major(4)
    with pytest.raises(InvalidInputError):
        apply_swap(row_major16, (1, 1), (1, 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(1, 8), st.integers(0, 2**32), st.integers(1, 300))
def test_incremental_exactness(dim, length, seed, swaps):
    sp = generate_probeset(dim, length, seed)
    rng = Stream(seed, 7)
    pl = random_placement(sp, rng)
    cost = total_cost(sp, pl)
    n = dim * dim
    for _ in range(swaps):
        fa, fb = rng.pair(n)
        a, b = divmod(fa, dim), divmod(fb, dim)
        a, b = (a[0] + 1, a[1] + 1), (b[0] + 1, b[1] + 1)
        lc, nlc = pair_local_cost(sp, pl, a, b)
        delta = swap_delta(sp, pl, a, b)
        assert delta == nlc - lc
        cost += delta
        pl = apply_swap(pl, a, b)
        assert sorted(pl.grid.reshape(-1).tolist()) == list(range(1, n + 1))
    assert cost == total_cost(sp, pl) == naive_cost(sp, pl)
    assert 0 <= cost <= 2 * dim * (dim - 1) * length


def test_every_adjacent_pair_exact(example_sp, row_major16):
    for a, b in itertools.permutations(itertools.product(range(1, 5), repeat=2), 2):
        after = apply_swap(row_major16, a, b)
        assert swap_delta(example_sp, row_major16, a, b) == naive_cost(example_sp, after) - 85


def test_random_placement_deterministic(example_sp):
    assert random_placement(example_sp, Stream(3, 1)) == random_placement(example_sp, Stream(3, 1))


def test_random_placement_uniform(tiny_sp):
    counts = Counter()
    trials = 10_000
    for seed in range(trials):
        pl = random_placement(tiny_sp, Stream(seed, 1))
        counts[tuple(pl.grid.reshape(-1).tolist())] += 1
    assert len(counts) == 24
    for perm in itertools.permutations(range(1, 5)):
        assert abs(counts[perm] / trials - 1 / 24) <= 0.01
    # chi-square, 23 degrees of freedom, 0.1% critical value 49.73
    exp = trials / 24
    chi2 = sum((c - exp) ** 2 / exp for c in counts.values())
    assert chi2 < 49.73
