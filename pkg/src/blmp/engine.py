"""Lock-step multi-worker local search: LS-Par, ALG1 and ALG2.

k logical workers run in rounds. Inside a round every worker proposes one swap
per trial; after each trial the workers meet at a barrier, a source worker is
picked by the coordinator and everybody adopts the source's grid and cost. All
workers therefore leave every barrier with identical state.

Two interchangeable implementations exist:

* the reference simulation, which keeps an explicit state per worker, can
  replay a :class:`SelectionScript`, record a full trace and check the
  replication invariants after every barrier;
* the compiled fast path (:mod:`blmp._kernels`), which keeps one shared grid.

Both consume the same random streams in the same order, so for a given seed
they return the same placement and the same costs.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .model import (
    InvalidInputError,
    Location,
    Placement,
    ProbeSet,
    cell_to_location,
    local_costs_flat,
    location_to_cell,
    neighbor_pair_count,
    neighbor_table,
    random_placement,
    total_cost_flat,
)
from .report import Checkpoint, RunReport
from .rng import COORDINATOR, Stream


class ReplayError(RuntimeError):
    """A selection script ran out or contradicted the run."""


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class RoundBudget:
    """Outer-round count or wall-clock seconds.

    ``time_cap`` optionally bounds a round budget by wall-clock seconds too
    (whichever comes first); capped runs are not reproducible.
    """

    kind: str
    amount: float
    time_cap: Optional[float] = None

    def __post_init__(self):
        if self.kind not in ("rounds", "seconds"):
            raise InvalidInputError(f"unknown budget kind {self.kind!r}")
        if not self.amount > 0:
            raise InvalidInputError("budget amount must be positive")
        if self.time_cap is not None and not self.time_cap > 0:
            raise InvalidInputError("time cap must be positive")

    @classmethod
    def rounds(cls, n: int, time_cap: Optional[float] = None) -> "RoundBudget":
        return cls("rounds", int(n), time_cap)

    @classmethod
    def seconds(cls, t: float) -> "RoundBudget":
        return cls("seconds", float(t))


@dataclass(frozen=True)
class SearchParams:
    # defaults are the settings used for the benchmark runs
    workers: int = 1
    budget: RoundBudget = RoundBudget("rounds", 1000)
    pr: float = 0.0
    max_trials1: int = 20
    max_trials2: int = 40000
    max_cost: int = 160
    max_cost1: int = 10
    max_cost2: int = 10
    winlength1: int = 1120
    winlength2: int = 320
    seed: int = 0

    def __post_init__(self):
        if self.workers < 1:
            raise InvalidInputError("need at least one worker")
        if not 0.0 <= self.pr <= 1.0:
            raise InvalidInputError("pr must lie in [0, 1]")
        if not 1 <= self.max_trials1 <= self.max_trials2:
            raise InvalidInputError("need 1 <= max_trials1 <= max_trials2")
        if min(self.max_cost, self.max_cost1, self.max_cost2) < 0:
            raise InvalidInputError("cost thresholds must be non-negative")
        if self.winlength1 < 1 or self.winlength2 < 1:
            raise InvalidInputError("window lengths must be positive")


@dataclass
class WorkerState:
    id: int
    grid: list[int]
    cost: int
    best_cost: int
    best_grid: list[int]
    denom: int
    avg_cost: int = 0
    sa: int = 0
    myub: int = 0
    ok: int = 0
    nrt: int = 0
    picker: object = None

    @property
    def average(self) -> Fraction:
        """Mean Hamming distance per neighbor pair at the last refresh."""
        return Fraction(self.avg_cost, self.denom)

    def snapshot(self) -> tuple:
        return (tuple(self.grid), self.cost, self.best_cost, tuple(self.best_grid),
                self.avg_cost, self.sa, self.myub, self.ok, self.nrt)


@dataclass(frozen=True)
class SyncDecision:
    source: Optional[int] = None


@dataclass
class SelectionScript:
    """Pre-decided random choices for an exact replay.

    ``pairs[w]`` lists worker ``w``'s location pairs in consumption order.
    ``sources`` lists the coordinator's picks, consumed only at barriers with
    more than one candidate.
    """

    pairs: dict[int, list[tuple[Location, Location]]]
    sources: list[int] = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: dict) -> "SelectionScript":
        pairs = {
            int(w): [(Location(*a), Location(*b)) for a, b in seq]
            for w, seq in data["pairs"].items()
        }
        return cls(pairs, [int(s) for s in data.get("sources", [])])

    def to_dict(self) -> dict:
        return {
            "pairs": {str(w): [[list(a), list(b)] for a, b in seq] for w, seq in self.pairs.items()},
            "sources": list(self.sources),
        }


class _ScriptExhausted(Exception):
    pass


class _ScriptPicker:
    def __init__(self, worker: int, dim: int, pairs):
        self.worker = worker
        self.dim = dim
        self.pairs = list(pairs)
        self.used = 0

    def pair(self, n: int) -> tuple[int, int]:
        if self.used >= len(self.pairs):
            raise _ScriptExhausted(f"worker {self.worker} has no location pair #{self.used + 1}")
        a, b = self.pairs[self.used]
        self.used += 1
        fa, fb = location_to_cell(self.dim, a), location_to_cell(self.dim, b)
        if fa == fb:
            raise ReplayError(f"worker {self.worker} pair #{self.used} repeats a location")
        return fa, fb

    def uniform(self) -> float:
        raise ReplayError("selection scripts carry no acceptance draws")


class _ScriptCoordinator:
    def __init__(self, sources):
        self.sources = list(sources)
        self.used = 0

    def choice(self, candidates):
        if len(candidates) == 1:
            return candidates[0]
        if self.used >= len(self.sources):
            raise _ScriptExhausted(f"coordinator has no source choice #{self.used + 1}")
        pick = self.sources[self.used]
        self.used += 1
        if pick not in candidates:
            raise ReplayError(f"scripted source {pick} is not among candidates {list(candidates)}")
        return pick


def select_source(candidates, coordinator) -> SyncDecision:
    """Uniform pick among ``candidates`` (ascending worker ids) from the coordinator stream."""
    cands = sorted(candidates)
    if not cands:
        return SyncDecision(None)
    return SyncDecision(coordinator.choice(cands))


# -- records -----------------------------------------------------------------

@dataclass
class Proposal:
    worker: int
    a: Location
    b: Location
    localcost: int
    newlocalcost: int


@dataclass
class TrialRecord:
    nrt: int
    proposals: list[Proposal]
    source: Optional[int]
    # (worker, post-swap COST, bestCOST at the check) for every uphill acceptance
    uphill: list[tuple[int, int, int]] = field(default_factory=list)
    uphill_source: Optional[int] = None
    cost: int = 0


@dataclass
class RoundRecord:
    round: int
    trials: list[TrialRecord]
    cost: int
    average: Optional[Fraction]
    best_cost: int
    sa: int
    myub: int
    broke: bool = False


# -- driver ------------------------------------------------------------------

def _drive(sim, budget: RoundBudget, checkpoint_every, report: RunReport) -> None:
    """Run ``sim`` until the budget is spent; the coordinator decides for everyone."""
    t0 = time.perf_counter()
    rounds = 0
    next_cp = checkpoint_every
    chunk = 1
    while True:
        elapsed = time.perf_counter() - t0
        if budget.kind == "rounds":
            todo = int(budget.amount) - rounds
            if todo <= 0:
                break
            if budget.time_cap is not None:
                if elapsed > budget.time_cap:
                    break
                todo = min(todo, chunk)
        else:
            if elapsed > budget.amount:
                break
            todo = chunk
        if checkpoint_every and budget.kind == "rounds":
            todo = min(todo, next_cp - rounds)
        c0 = time.perf_counter()
        rounds += sim.run(todo)
        if (budget.kind == "seconds" or budget.time_cap is not None) and sim.adaptive:
            dt = time.perf_counter() - c0
            if dt < 0.02:
                chunk = min(chunk * 2, 1 << 16)
            elif dt > 0.1 and chunk > 1:
                chunk //= 2
        if checkpoint_every:
            now_ms = (time.perf_counter() - t0) * 1000.0
            mark = rounds if budget.kind == "rounds" else now_ms / 1000.0
            if mark >= next_cp:
                report.checkpoints.append(Checkpoint(rounds, now_ms, sim.best_cost))
                while next_cp <= mark:
                    next_cp += checkpoint_every
    report.rounds_executed = rounds
    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    report.best_cost = sim.best_cost
    report.final_cost = sim.cost
    if checkpoint_every and (not report.checkpoints or report.checkpoints[-1].rounds != rounds):
        report.checkpoints.append(Checkpoint(rounds, report.elapsed_ms, sim.best_cost))
    if sim.trajectory is not None:
        report.trajectory = list(sim.trajectory)
    report.counters = dict(sim.counters)


def _initial_grid(sp: ProbeSet, initial: Optional[Placement], first_stream: Optional[Stream]) -> list[int]:
    if initial is not None:
        if initial.dim != sp.dim:
            raise InvalidInputError("initial placement does not match the instance size")
        return initial.flat0()
    return random_placement(sp, first_stream).flat0()


class _Sim:
    """State shared by the reference and fast simulations."""

    adaptive = False

    def __init__(self, sp: ProbeSet, params: SearchParams, trajectory: bool):
        self.sp = sp
        self.params = params
        self.dim = sp.dim
        self.n = sp.dim * sp.dim
        self.denom = neighbor_pair_count(sp.dim)
        self.trajectory = [] if trajectory else None
        self.counters = {"trials": 0, "swap_rounds": 0, "uphill_rounds": 0, "break_rounds": 0}


# -- reference simulation -----------------------------------------------------

class _Reference(_Sim):
    def __init__(self, sp, params, *, script=None, initial=None, trajectory=False,
                 trace=False, debug=False, on_round=None):
        super().__init__(sp, params, trajectory)
        k = params.workers
        self.dist = sp.distance_rows
        self.nbrs = neighbor_table(sp.dim)
        self.debug = debug
        self.on_round = on_round
        self.records: Optional[list[RoundRecord]] = [] if trace else None
        self.round_index = 0
        if script is None:
            self.coordinator = Stream(params.seed, COORDINATOR)
            pickers = [Stream(params.seed, i) for i in range(1, k + 1)]
            first = pickers[0]
        else:
            self.coordinator = _ScriptCoordinator(script.sources)
            pickers = [_ScriptPicker(i, sp.dim, script.pairs.get(i, [])) for i in range(1, k + 1)]
            first = Stream(params.seed, 1)
        grid = _initial_grid(sp, initial, first)
        cost = total_cost_flat(self.dist, self.dim, grid)
        self.workers = [
            WorkerState(i, list(grid), cost, cost, list(grid), self.denom, avg_cost=cost, picker=pickers[i - 1])
            for i in range(1, k + 1)
        ]
        self.check_replicated()

    @property
    def lead(self) -> WorkerState:
        return self.workers[0]

    @property
    def best_cost(self) -> int:
        return self.lead.best_cost

    @property
    def cost(self) -> int:
        return self.lead.cost

    def best_placement(self) -> Placement:
        return Placement.from_flat0(self.dim, self.lead.best_grid)

    def _swap(self, w: WorkerState, a: int, b: int) -> None:
        w.grid[a], w.grid[b] = w.grid[b], w.grid[a]

    def _adopt(self, source: int, fields=("grid", "cost")) -> None:
        src = self.workers[source - 1]
        for w in self.workers:
            if w is src:
                continue
            for f in fields:
                v = getattr(src, f)
                setattr(w, f, list(v) if isinstance(v, list) else v)

    def _pick(self, w: WorkerState) -> tuple[int, int]:
        try:
            return w.picker.pair(self.n)
        except _ScriptExhausted as e:
            raise ReplayError(f"round {self.round_index + 1}, trial {w.nrt}: {e}") from None

    def _select(self, candidates) -> SyncDecision:
        try:
            return select_source(candidates, self.coordinator)
        except _ScriptExhausted as e:
            raise ReplayError(f"round {self.round_index + 1}: {e}") from None

    def check_exact(self) -> None:
        if not self.debug:
            return
        for w in self.workers:
            real = total_cost_flat(self.dist, self.dim, w.grid)
            if real != w.cost:
                raise InvariantViolation(f"worker {w.id}: COST {w.cost} but placement scores {real}")
            if sorted(w.grid) != list(range(self.n)):
                raise InvariantViolation(f"worker {w.id}: grid is not a permutation")

    def check_replicated(self) -> None:
        if not self.debug:
            return
        self.check_exact()
        ref = self.lead.snapshot()
        for w in self.workers[1:]:
            if w.snapshot() != ref:
                raise InvariantViolation(f"worker {w.id} diverged from worker 1 at a round boundary")
        if self.lead.best_cost != total_cost_flat(self.dist, self.dim, self.lead.best_grid):
            raise InvariantViolation("bestCOST does not score the best placement")


class _AlgReference(_Reference):
    def __init__(self, sp, params, variant: int, **kw):
        self.variant = variant
        super().__init__(sp, params, **kw)

    def _cap(self, w: WorkerState) -> int:
        if self.variant == 1:
            return (8 * w.avg_cost) // self.denom + w.myub
        return self.params.max_cost + w.myub

    def run(self, max_rounds: int) -> int:
        for _ in range(max_rounds):
            self.round()
        return max_rounds

    def round(self) -> None:
        p = self.params
        trials = []
        for w in self.workers:
            w.ok = 0
            w.nrt = 0
        broke = False
        while True:
            props = []
            for w in self.workers:
                w.nrt += 1
                a, b = self._pick(w)
                lc, nlc = local_costs_flat(self.dist, self.nbrs, w.grid, a, b)
                props.append((a, b, lc, nlc))
                if nlc <= lc:
                    w.ok = 1
                    self._swap(w, a, b)
                    w.cost -= lc - nlc
            rec = TrialRecord(
                self.lead.nrt,
                [Proposal(w.id, cell_to_location(self.dim, a), cell_to_location(self.dim, b), lc, nlc)
                 for w, (a, b, lc, nlc) in zip(self.workers, props)],
                None,
            )
            dec = self._select([w.id for w in self.workers if w.ok])
            if dec.source is not None:
                rec.source = dec.source
                self._adopt(dec.source)
                for w in self.workers:
                    w.ok = 1
                self.check_exact()
            else:
                for w, (a, b, lc, nlc) in zip(self.workers, props):
                    if w.nrt >= p.max_trials1:
                        if nlc <= self._cap(w):
                            if w.cost + nlc - lc <= w.best_cost + p.max_cost2:
                                w.ok = 1
                                self._swap(w, a, b)
                                w.cost += nlc - lc
                                rec.uphill.append((w.id, w.cost, w.best_cost))
                dec = self._select([w.id for w in self.workers if w.ok])
                if dec.source is not None:
                    rec.uphill_source = dec.source
                    self._adopt(dec.source)
                    for w in self.workers:
                        w.ok = 1
                    self.counters["uphill_rounds"] += 1
                    self.check_exact()
            rec.cost = self.lead.cost
            trials.append(rec)
            if self.lead.ok:
                self.counters["swap_rounds"] += 1
                break
            if self.lead.nrt >= p.max_trials2:
                self.counters["break_rounds"] += 1
                broke = True
                break
        self.counters["trials"] += self.lead.nrt

        for w in self.workers:
            if self.variant == 1:
                w.avg_cost = w.cost
            if w.cost < w.best_cost:
                w.best_cost = w.cost
                w.best_grid = list(w.grid)
            w.sa += 1
            if w.myub == 0:
                if w.sa == p.winlength1:
                    w.sa = 0
                    w.myub = p.max_cost1
            else:
                if w.sa == p.winlength2:
                    w.sa = 0
                    w.myub = 0
        self.round_index += 1
        self.check_replicated()
        if self.trajectory is not None:
            self.trajectory.append(self.lead.best_cost)
        lead = self.lead
        if self.records is not None:
            self.records.append(RoundRecord(
                self.round_index, trials, lead.cost,
                lead.average if self.variant == 1 else None,
                lead.best_cost, lead.sa, lead.myub, broke,
            ))
        if self.on_round is not None:
            self.on_round(self.round_index, self.workers)


class _LsParReference(_Reference):
    def run(self, max_rounds: int) -> int:
        pr = self.params.pr
        for _ in range(max_rounds):
            moved = {}
            for w in self.workers:
                a, b = self._pick(w)
                lc, nlc = local_costs_flat(self.dist, self.nbrs, w.grid, a, b)
                moved[w.id] = True
                if nlc < lc:
                    self._swap(w, a, b)
                    w.cost -= lc - nlc
                    if w.cost < w.best_cost:
                        w.best_cost = w.cost
                        w.best_grid = list(w.grid)
                elif w.picker.uniform() <= pr:
                    self._swap(w, a, b)
                    w.cost += nlc - lc
                else:
                    moved[w.id] = False
            lo = min(w.cost for w in self.workers)
            dec = self._select([w.id for w in self.workers if w.cost == lo])
            self.counters["swap_rounds"] += int(moved[dec.source])
            self._adopt(dec.source, ("grid", "cost", "best_grid", "best_cost"))
            self.counters["trials"] += 1
            self.round_index += 1
            self.check_replicated()
            if self.trajectory is not None:
                self.trajectory.append(self.lead.best_cost)
            if self.on_round is not None:
                self.on_round(self.round_index, self.workers)
        return max_rounds


# -- fast path ----------------------------------------------------------------

def _stack(streams, width: int) -> np.ndarray:
    return np.stack([s.buf[s.pos:s.pos + width] for s in streams])


class _Fast(_Sim):
    adaptive = True
    _EXTRA = 1 << 15

    def __init__(self, sp, params, *, initial=None, trajectory=False):
        super().__init__(sp, params, trajectory)
        k = params.workers
        self.coordinator = Stream(params.seed, COORDINATOR)
        self.streams = [Stream(params.seed, i) for i in range(1, k + 1)]
        grid = _initial_grid(sp, initial, self.streams[0])
        self.dist = sp.distances
        table = neighbor_table(sp.dim)
        self.nbr = np.full((self.n, 4), -1, dtype=np.int64)
        self.ncnt = np.zeros(self.n, dtype=np.int64)
        for c, nb in enumerate(table):
            self.nbr[c, :len(nb)] = nb
            self.ncnt[c] = len(nb)
        self.grid = np.asarray(grid, dtype=np.int64)
        self.best_grid = self.grid.copy()
        cost = total_cost_flat(sp.distance_rows, sp.dim, grid)
        self.st = np.array([cost, cost, cost, 0, 0], dtype=np.int64)
        self.stats = np.zeros(4, dtype=np.int64)

    @property
    def best_cost(self) -> int:
        return int(self.st[_kernels.BEST])

    @property
    def cost(self) -> int:
        return int(self.st[_kernels.COST])

    def best_placement(self) -> Placement:
        return Placement.from_flat0(self.dim, self.best_grid.tolist())

    def _sync_counters(self) -> None:
        s = self.stats
        self.counters.update(trials=int(s[0]), swap_rounds=int(s[1]),
                             uphill_rounds=int(s[2]), break_rounds=int(s[3]))

    def _traj_buffer(self, rounds: int) -> np.ndarray:
        return np.empty(rounds if self.trajectory is not None else 0, dtype=np.int64)

    def _advance(self, pos, cpos) -> None:
        for s, used in zip(self.streams, pos):
            s.pos += int(used)
        self.coordinator.pos += int(cpos[0])


class _AlgFast(_Fast):
    def __init__(self, sp, params, variant: int, **kw):
        super().__init__(sp, params, **kw)
        p = params
        self.prm = np.array([p.workers, p.max_trials1, p.max_trials2, p.max_cost, p.max_cost1,
                             p.max_cost2, p.winlength1, p.winlength2, self.denom, variant], dtype=np.int64)
        self.reserve = 2 * p.max_trials2

    def run(self, max_rounds: int) -> int:
        done = 0
        while done < max_rounds:
            todo = min(max_rounds - done, 1 << 16)
            need = self.reserve + self._EXTRA
            for s in self.streams:
                s.reserve(need)
            self.coordinator.reserve(todo)
            width = min(len(s.buf) - s.pos for s in self.streams)
            bufs = _stack(self.streams, width)
            pos = np.zeros(len(self.streams), dtype=np.int64)
            cbuf = self.coordinator.buf[self.coordinator.pos:]
            cpos = np.zeros(1, dtype=np.int64)
            traj = self._traj_buffer(todo)
            r = _kernels.alg_chunk(self.dist, self.nbr, self.ncnt, self.grid, self.best_grid, self.st,
                                   self.prm, bufs, pos, cbuf, cpos, todo, self.reserve, traj, self.stats)
            self._advance(pos, cpos)
            if self.trajectory is not None:
                self.trajectory.extend(traj[:r].tolist())
            done += r
        self._sync_counters()
        return done


class _LsParFast(_Fast):
    def run(self, max_rounds: int) -> int:
        done = 0
        k = self.params.workers
        while done < max_rounds:
            todo = min(max_rounds - done, 1 << 15)
            for s in self.streams:
                s.reserve(3 * todo)
            self.coordinator.reserve(todo)
            bufs = _stack(self.streams, 3 * todo)
            pos = np.zeros(k, dtype=np.int64)
            cbuf = self.coordinator.buf[self.coordinator.pos:]
            cpos = np.zeros(1, dtype=np.int64)
            traj = self._traj_buffer(todo)
            r = _kernels.lspar_chunk(self.dist, self.nbr, self.ncnt, self.grid, self.best_grid, self.st,
                                     k, float(self.params.pr), bufs, pos, cbuf, cpos, todo, traj, self.stats)
            self._advance(pos, cpos)
            if self.trajectory is not None:
                self.trajectory.extend(traj[:r].tolist())
            done += r
        self._sync_counters()
        return done


# -- public entry points -----------------------------------------------------

def _choose_engine(engine: str, script, trace, debug, on_round) -> str:
    needs_reference = script is not None or trace or debug or on_round is not None
    if engine == "auto":
        return "reference" if needs_reference else "fast"
    if engine == "fast" and needs_reference:
        raise InvalidInputError("scripts, traces, debug checks and round hooks need engine='reference'")
    if engine not in ("fast", "reference"):
        raise InvalidInputError(f"unknown engine {engine!r}")
    return engine


def _trivial(sp: ProbeSet, name: str, params: SearchParams):
    pl = Placement.row_major(1)
    rep = RunReport(name, params.workers, params.seed, params.budget.kind, params.budget.amount)
    return pl, 0, rep


def _search(name, sp, params, make_ref, make_fast, *, engine, script, initial, trajectory,
            trace, debug, on_round, checkpoint_every):
    if sp.dim == 1:
        return _trivial(sp, name, params)
    which = _choose_engine(engine, script, trace, debug, on_round)
    if which == "reference":
        sim = make_ref(script=script, initial=initial, trajectory=trajectory, trace=trace,
                       debug=debug, on_round=on_round)
    else:
        sim = make_fast(initial=initial, trajectory=trajectory)
    rep = RunReport(name, params.workers, params.seed, params.budget.kind, params.budget.amount)
    _drive(sim, params.budget, checkpoint_every, rep)
    if trace:
        rep.trace = sim.records
    return sim.best_placement(), sim.best_cost, rep


def ls_par_run(sp: ProbeSet, params: SearchParams, *, engine: str = "auto", initial=None,
               trajectory: bool = False, debug: bool = False, on_round: Callable | None = None,
               checkpoint_every=None):
    """LS-Par: k independent LS steps per round, then everybody adopts a minimum-COST worker."""
    return _search(
        "ls-par", sp, params,
        lambda **kw: _LsParReference(sp, params, **kw),
        lambda **kw: _LsParFast(sp, params, **kw),
        engine=engine, script=None, initial=initial, trajectory=trajectory, trace=False,
        debug=debug, on_round=on_round, checkpoint_every=checkpoint_every,
    )


def _alg(variant: int, sp, params, script, engine, initial, trajectory, trace, debug, on_round,
         checkpoint_every):
    return _search(
        f"alg{variant}", sp, params,
        lambda **kw: _AlgReference(sp, params, variant, **kw),
        lambda **kw: _AlgFast(sp, params, variant, **kw),
        engine=engine, script=script, initial=initial, trajectory=trajectory, trace=trace,
        debug=debug, on_round=on_round, checkpoint_every=checkpoint_every,
    )


def alg1_run(sp: ProbeSet, params: SearchParams, script: SelectionScript | None = None, *,
             engine: str = "auto", initial=None, trajectory: bool = False, trace: bool = False,
             debug: bool = False, on_round: Callable | None = None, checkpoint_every=None):
    """ALG1. Uphill swaps are gated by ``floor(8 * average) + myub``.

    Returns ``(best placement, bestCOST, report)``. With ``trace=True`` the
    report carries a ``trace`` list of :class:`RoundRecord`.
    """
    return _alg(1, sp, params, script, engine, initial, trajectory, trace, debug, on_round,
                checkpoint_every)


def alg2_run(sp: ProbeSet, params: SearchParams, script: SelectionScript | None = None, *,
             engine: str = "auto", initial=None, trajectory: bool = False, trace: bool = False,
             debug: bool = False, on_round: Callable | None = None, checkpoint_every=None):
    """ALG2: as ALG1 with the constant ``max_cost`` in place of ``8 * average``."""
    return _alg(2, sp, params, script, engine, initial, trajectory, trace, debug, on_round,
                checkpoint_every)
