"""Ground truth for testing: random instances, exhaustive optimum, delta fuzzing."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .model import (
    ALPHABET,
    InvalidInputError,
    Placement,
    ProbeSet,
    apply_swap,
    cell_to_location,
    random_placement,
    swap_delta,
    total_cost,
)
from .rng import Stream

MAX_BRUTE_FORCE_DIM = 3


class InstanceTooLargeError(InvalidInputError):
    pass


def generate_probeset(dim: int, probelength: int, seed: int) -> ProbeSet:
    """``dim**2`` probes with i.i.d. uniform symbols from stream ``(seed, 0)``."""
    if dim < 1 or probelength < 1:
        raise InvalidInputError("dim and probelength must be positive")
    count = dim * dim * probelength
    s = Stream(seed, 0)
    s.reserve(count)
    codes = (s.buf[s.pos:s.pos + count] % np.uint64(4)).astype(np.int64)
    s.pos += count
    letters = np.array(list(ALPHABET))[codes].reshape(dim * dim, probelength)
    return ProbeSet(dim, probelength, tuple("".join(row) for row in letters))


@dataclass
class OracleResult:
    optimum_cost: int
    witness: Placement
    enumerated_count: int


def _edges(dim: int) -> tuple[np.ndarray, np.ndarray]:
    u, v = [], []
    for r in range(dim):
        for c in range(dim):
            cell = r * dim + c
            if c < dim - 1:
                u.append(cell)
                v.append(cell + 1)
            if r < dim - 1:
                u.append(cell)
                v.append(cell + dim)
    return np.array(u, dtype=np.intp), np.array(v, dtype=np.intp)


@lru_cache(maxsize=None)
def _perms(items: tuple[int, ...]) -> np.ndarray:
    m = len(items)
    flat = np.fromiter(itertools.chain.from_iterable(itertools.permutations(items)), dtype=np.int8)
    return flat.reshape(-1, m) if m else np.zeros((1, 0), dtype=np.int8)


def symmetry_representatives(dim: int) -> list[int]:
    """Lexicographically smallest flat cell of each orbit under the 8 grid symmetries."""
    reps = set()
    for r in range(dim):
        for c in range(dim):
            m = dim - 1
            images = [(r, c), (c, m - r), (m - r, m - c), (m - c, r),
                      (r, m - c), (m - r, c), (c, r), (m - c, m - r)]
            rr, cc = min(images)
            reps.add(rr * dim + cc)
    return sorted(reps)


def brute_force_optimum(sp: ProbeSet, prune_symmetry: bool = True) -> OracleResult:
    """Exhaustive minimum over all placements of a grid with ``dim <= 3``.

    With ``prune_symmetry`` probe 1 is only tried at one cell per symmetry
    orbit, which cannot change the minimum.
    """
    dim = sp.dim
    if dim > MAX_BRUTE_FORCE_DIM:
        raise InstanceTooLargeError(f"brute force refuses dim={dim} (limit {MAX_BRUTE_FORCE_DIM})")
    n = dim * dim
    d = sp.distances.astype(np.int64)
    u, v = _edges(dim)
    if prune_symmetry:
        rest = _perms(tuple(range(1, n)))
        blocks = []
        for cell in symmetry_representatives(dim):
            blocks.append(np.insert(rest, cell, 0, axis=1))
        arrangements = np.concatenate(blocks).astype(np.intp)
    else:
        arrangements = _perms(tuple(range(n))).astype(np.intp)
    if len(u):
        costs = d[arrangements[:, u], arrangements[:, v]].sum(axis=1)
    else:
        costs = np.zeros(len(arrangements), dtype=np.int64)
    best = int(np.argmin(costs))
    witness = Placement.from_flat0(dim, arrangements[best].tolist())
    return OracleResult(int(costs[best]), witness, len(arrangements))


@dataclass
class VerificationReport:
    passed: bool
    swaps_checked: int
    # (swap number, maintained COST, recomputed cost) at the first mismatch
    first_divergence: Optional[tuple[int, int, int]] = None


def verify_incremental(sp: ProbeSet, seed: int, swaps: int) -> VerificationReport:
    """Apply random swaps, tracking COST by deltas, and recompute after each one."""
    rng = Stream(seed, 1)
    pl = random_placement(sp, rng)
    cost = total_cost(sp, pl)
    n = len(sp)
    if n < 2:
        return VerificationReport(True, 0)
    for step in range(1, swaps + 1):
        fa, fb = rng.pair(n)
        a, b = cell_to_location(sp.dim, fa), cell_to_location(sp.dim, fb)
        cost += swap_delta(sp, pl, a, b)
        pl = apply_swap(pl, a, b)
        real = total_cost(sp, pl)
        if real != cost:
            return VerificationReport(False, step, (step, cost, real))
    return VerificationReport(True, swaps)
