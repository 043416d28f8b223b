"""Probes, placements and the border-length cost.

Grid coordinates and probe indices are 1-based in the public API. The
``*_flat`` helpers work on row-major flat cells and 0-based probe ids and are
what the search loops use.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .rng import Stream

ALPHABET = "ACGT"
_CODE = {ch: i for i, ch in enumerate(ALPHABET)}


class InvalidInputError(ValueError):
    """Raised when an operation's precondition is violated."""


class Probe(str):
    """A DNA sequence over ``ACGT``."""

    def __new__(cls, bases: str):
        s = str(bases)
        bad = set(s) - set(ALPHABET)
        if bad:
            raise InvalidInputError(f"illegal symbol(s) {''.join(sorted(bad))!r} in probe {s!r}")
        if not s:
            raise InvalidInputError("empty probe")
        return super().__new__(cls, s)


class Location(NamedTuple):
    row: int
    col: int


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise InvalidInputError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a, b))


@dataclass(frozen=True, eq=False)
class ProbeSet:
    dim: int
    probelength: int
    probes: tuple[Probe, ...]

    def __post_init__(self):
        if self.dim < 1 or self.probelength < 1:
            raise InvalidInputError("dim and probelength must be positive")
        probes = tuple(Probe(p) for p in self.probes)
        if len(probes) != self.dim * self.dim:
            raise InvalidInputError(f"expected {self.dim * self.dim} probes, got {len(probes)}")
        for i, p in enumerate(probes, 1):
            if len(p) != self.probelength:
                raise InvalidInputError(f"probe {i} has length {len(p)}, expected {self.probelength}")
        object.__setattr__(self, "probes", probes)

    @classmethod
    def from_sequences(cls, seqs: Sequence[str]) -> "ProbeSet":
        n = len(seqs)
        dim = int(round(n ** 0.5))
        if dim * dim != n or n == 0:
            raise InvalidInputError(f"{n} probes do not fill a square grid")
        return cls(dim, len(seqs[0]), tuple(seqs))

    def __len__(self) -> int:
        return len(self.probes)

    def __eq__(self, other):
        if not isinstance(other, ProbeSet):
            return NotImplemented
        return (self.dim, self.probelength, self.probes) == (other.dim, other.probelength, other.probes)

    def __hash__(self):
        return hash((self.dim, self.probelength, self.probes))

    def probe(self, index: int) -> Probe:
        """Probe by 1-based index."""
        return self.probes[index - 1]

    @cached_property
    def codes(self) -> np.ndarray:
        """(n, probelength) uint8 array of 2-bit symbol codes."""
        return np.array([[_CODE[c] for c in p] for p in self.probes], dtype=np.uint8).reshape(
            len(self.probes), self.probelength
        )

    @cached_property
    def distances(self) -> np.ndarray:
        """(n, n) int32 Hamming distance matrix over 0-based probe ids."""
        codes = self.codes
        n = len(codes)
        out = np.empty((n, n), dtype=np.int32)
        step = max(1, (1 << 22) // max(1, n * self.probelength))
        for lo in range(0, n, step):
            blk = codes[lo:lo + step]
            out[lo:lo + step] = (blk[:, None, :] != codes[None, :, :]).sum(axis=2)
        return out

    @cached_property
    def distance_rows(self) -> list[list[int]]:
        return self.distances.tolist()


@dataclass(eq=False)
class Placement:
    """A dim x dim grid holding each 1-based probe index exactly once."""

    grid: np.ndarray = field()

    def __post_init__(self):
        g = np.array(self.grid, dtype=np.int64)
        if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] < 1:
            raise InvalidInputError(f"placement grid must be square, got shape {g.shape}")
        n = g.size
        if g.min() < 1 or g.max() > n:
            raise InvalidInputError(f"probe index out of range 1..{n}")
        if len(np.unique(g)) != n:
            raise InvalidInputError("placement repeats a probe index")
        self.grid = g

    @property
    def dim(self) -> int:
        return self.grid.shape[0]

    @classmethod
    def row_major(cls, dim: int) -> "Placement":
        return cls(np.arange(1, dim * dim + 1).reshape(dim, dim))

    @classmethod
    def from_flat0(cls, dim: int, flat: Sequence[int]) -> "Placement":
        return cls(np.asarray(flat, dtype=np.int64).reshape(dim, dim) + 1)

    def flat0(self) -> list[int]:
        return (self.grid.reshape(-1) - 1).tolist()

    def __getitem__(self, loc: Location) -> int:
        r, c = loc
        return int(self.grid[r - 1, c - 1])

    def copy(self) -> "Placement":
        return Placement(self.grid.copy())

    def __eq__(self, other):
        if not isinstance(other, Placement):
            return NotImplemented
        return self.grid.shape == other.grid.shape and bool((self.grid == other.grid).all())

    def __repr__(self):
        return f"Placement({self.grid.tolist()})"


def _check_loc(dim: int, loc) -> int:
    r, c = loc
    if not (1 <= r <= dim and 1 <= c <= dim):
        raise InvalidInputError(f"location {tuple(loc)} outside {dim}x{dim} grid")
    return (r - 1) * dim + (c - 1)


def _check_pair(dim: int, a, b) -> tuple[int, int]:
    fa, fb = _check_loc(dim, a), _check_loc(dim, b)
    if fa == fb:
        raise InvalidInputError(f"swap locations must differ, got {tuple(a)} twice")
    return fa, fb


def neighbor_locations(dim: int, loc) -> list[Location]:
    """In-bounds orthogonal neighbors in the order up, down, left, right."""
    _check_loc(dim, loc)
    r, c = loc
    out = []
    for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
        rr, cc = r + dr, c + dc
        if 1 <= rr <= dim and 1 <= cc <= dim:
            out.append(Location(rr, cc))
    return out


@lru_cache(maxsize=64)
def neighbor_table(dim: int) -> tuple[tuple[int, ...], ...]:
    """Flat-cell neighbor lists, same order as :func:`neighbor_locations`."""
    table = []
    for r in range(dim):
        for c in range(dim):
            nb = []
            if r > 0:
                nb.append((r - 1) * dim + c)
            if r < dim - 1:
                nb.append((r + 1) * dim + c)
            if c > 0:
                nb.append(r * dim + c - 1)
            if c < dim - 1:
                nb.append(r * dim + c + 1)
            table.append(tuple(nb))
    return tuple(table)


def neighbor_pair_count(dim: int) -> int:
    return dim * (dim - 1) * 2


def total_cost(sp: ProbeSet, pl: Placement) -> int:
    if pl.dim != sp.dim:
        raise InvalidInputError(f"placement is {pl.dim}x{pl.dim}, instance dim is {sp.dim}")
    g = pl.grid - 1
    d = sp.distances
    return int(d[g[:, :-1], g[:, 1:]].sum(dtype=np.int64) + d[g[:-1, :], g[1:, :]].sum(dtype=np.int64))


def total_cost_flat(dist: list[list[int]], dim: int, grid: Sequence[int]) -> int:
    s = 0
    for r in range(dim):
        base = r * dim
        for c in range(dim):
            p = grid[base + c]
            if c < dim - 1:
                s += dist[p][grid[base + c + 1]]
            if r < dim - 1:
                s += dist[p][grid[base + dim + c]]
    return s


def local_costs_flat(dist, nbrs, grid, a: int, b: int) -> tuple[int, int]:
    """(localcost, newlocalcost) for swapping flat cells ``a`` and ``b``.

    When ``a`` and ``b`` are adjacent, the new sums see the other swapped cell
    with its post-swap occupant, so ``newlocalcost - localcost`` is the exact
    change of the total cost.
    """
    pa, pb = grid[a], grid[b]
    da, db = dist[pa], dist[pb]
    lc = 0
    nlc = 0
    for n in nbrs[a]:
        q = grid[n]
        lc += da[q]
        nlc += db[pa if n == b else q]
    for n in nbrs[b]:
        q = grid[n]
        lc += db[q]
        nlc += da[pb if n == a else q]
    return lc, nlc


def pair_local_cost(sp: ProbeSet, pl: Placement, a, b) -> tuple[int, int]:
    fa, fb = _check_pair(sp.dim, a, b)
    return local_costs_flat(sp.distance_rows, neighbor_table(sp.dim), pl.flat0(), fa, fb)


def swap_delta(sp: ProbeSet, pl: Placement, a, b) -> int:
    lc, nlc = pair_local_cost(sp, pl, a, b)
    return nlc - lc


def apply_swap(pl: Placement, a, b) -> Placement:
    """Return a copy of ``pl`` with the occupants of ``a`` and ``b`` exchanged."""
    _check_pair(pl.dim, a, b)
    g = pl.grid.copy()
    (r1, c1), (r2, c2) = a, b
    g[r1 - 1, c1 - 1], g[r2 - 1, c2 - 1] = g[r2 - 1, c2 - 1], g[r1 - 1, c1 - 1]
    return Placement(g)


def random_placement(sp: ProbeSet, rng: Stream) -> Placement:
    idx = list(range(len(sp)))
    rng.shuffle(idx)
    return Placement.from_flat0(sp.dim, idx)


def cell_to_location(dim: int, cell: int) -> Location:
    return Location(cell // dim + 1, cell % dim + 1)


def location_to_cell(dim: int, loc) -> int:
    return _check_loc(dim, loc)
