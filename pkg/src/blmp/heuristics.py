"""Sequential placement heuristics: epitaxial greedy growth and LS hill climbing."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .engine import RoundBudget, _drive, _initial_grid, _Sim
from .model import (
    InvalidInputError,
    Placement,
    ProbeSet,
    local_costs_flat,
    neighbor_table,
    total_cost_flat,
)
from .report import RunReport
from .rng import Stream


@dataclass(frozen=True)
class LsParams:
    budget: RoundBudget = RoundBudget("rounds", 10000)
    pr: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.pr <= 1.0:
            raise InvalidInputError("pr must lie in [0, 1]")


@dataclass
class EpitaxialStep:
    cell: int
    probe: int
    filled_neighbors: int
    max_filled_elsewhere: int


def epitaxial_place(sp: ProbeSet, seed: int, on_step: Optional[Callable[[EpitaxialStep], None]] = None) -> Placement:
    """Grow a placement greedily from one random seed probe.

    Draw order on stream ``(seed, 1)``: first cell, first probe, then per step
    the cell among the empty cells with the most filled neighbors (row-major
    candidate order) and the probe among the cheapest unplaced ones (ascending
    index order). A choice from a single candidate consumes no draw.
    """
    rng = Stream(seed, 1)
    n = len(sp)
    dim = sp.dim
    dist = sp.distances
    table = neighbor_table(dim)
    grid = np.full(n, -1, dtype=np.int64)
    filled_nb = np.zeros(n, dtype=np.int64)
    unplaced = np.ones(n, dtype=bool)

    def put(cell: int, probe: int) -> None:
        grid[cell] = probe
        unplaced[probe] = False
        for m in table[cell]:
            filled_nb[m] += 1

    put(rng.below(n), rng.below(n))
    for _ in range(n - 1):
        counts = np.where(grid < 0, filled_nb, -1)
        top = counts.max()
        cells = np.flatnonzero(counts == top)
        cell = int(rng.choice(cells))
        nb_probes = [grid[m] for m in table[cell] if grid[m] >= 0]
        free = np.flatnonzero(unplaced)
        costs = dist[np.ix_(free, nb_probes)].sum(axis=1)
        ties = free[costs == costs.min()]
        probe = int(rng.choice(ties))
        if on_step is not None:
            others = counts.copy()
            others[cell] = -1
            on_step(EpitaxialStep(cell, probe, int(top), int(others.max())))
        put(cell, probe)
    return Placement.from_flat0(dim, grid.tolist())


class _LsSim(_Sim):
    def __init__(self, sp: ProbeSet, params: LsParams, verify: bool, trajectory: bool):
        self.rng = Stream(params.seed, 1)
        super().__init__(sp, params, trajectory)
        self.pr = params.pr
        self.verify = verify
        self.dist = sp.distance_rows
        self.nbrs = neighbor_table(sp.dim)
        self.grid = _initial_grid(sp, None, self.rng)
        self.cost = total_cost_flat(self.dist, self.dim, self.grid)
        self.best_cost = self.cost
        self.best_grid = list(self.grid)
        self.counters = {"trials": 0, "improving": 0, "uphill": 0}

    def run(self, max_rounds: int) -> int:
        dist, nbrs, grid, n, rng = self.dist, self.nbrs, self.grid, self.n, self.rng
        for _ in range(max_rounds):
            a, b = rng.pair(n)
            lc, nlc = local_costs_flat(dist, nbrs, grid, a, b)
            if nlc < lc:
                grid[a], grid[b] = grid[b], grid[a]
                self.cost -= lc - nlc
                self.counters["improving"] += 1
                if self.cost < self.best_cost:
                    self.best_cost = self.cost
                    self.best_grid = list(grid)
            elif rng.uniform() <= self.pr:
                grid[a], grid[b] = grid[b], grid[a]
                self.cost += nlc - lc
                self.counters["uphill"] += 1
            self.counters["trials"] += 1
            if self.verify:
                real = total_cost_flat(dist, self.dim, grid)
                if real != self.cost:
                    raise AssertionError(f"COST drifted: kept {self.cost}, placement scores {real}")
            if self.trajectory is not None:
                self.trajectory.append(self.best_cost)
        return max_rounds


def ls_run(sp: ProbeSet, params: LsParams, *, verify: bool = False, trajectory: bool = False,
           checkpoint_every=None) -> tuple[Placement, int, RunReport]:
    """Probabilistic hill climbing over random swaps.

    Improving swaps are always taken; any other swap is taken when a uniform
    draw is ``<= pr``. Returns the best placement ever seen. Uses stream
    ``(seed, 1)``, the same as worker 1 of :func:`blmp.engine.ls_par_run`.
    """
    rep = RunReport("ls", 1, params.seed, params.budget.kind, params.budget.amount)
    if sp.dim == 1:
        return Placement.row_major(1), 0, rep
    sim = _LsSim(sp, params, verify, trajectory)
    _drive(sim, params.budget, checkpoint_every, rep)
    return Placement.from_flat0(sp.dim, sim.best_grid), sim.best_cost, rep
