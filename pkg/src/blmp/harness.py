"""Experiment orchestration shared by the CLI and the acceptance tests."""
from __future__ import annotations

import json
import math
import time
from fractions import Fraction

from .engine import (
    RoundBudget,
    SearchParams,
    SelectionScript,
    alg1_run,
    alg2_run,
    ls_par_run,
)
from .heuristics import LsParams, epitaxial_place, ls_run
from .io import data_path, read_placement_file, read_probes_file
from .model import InvalidInputError, Placement, ProbeSet, neighbor_pair_count, total_cost
from .report import RunReport

ALGORITHMS = ("epitaxial", "ls", "ls-par", "alg1", "alg2")


def run_algorithm(sp: ProbeSet, algo: str, params: SearchParams, *, instance: str = "",
                  initial: Placement | None = None, checkpoint_every=None,
                  trajectory: bool = False) -> tuple[Placement, RunReport]:
    if algo == "epitaxial":
        t0 = time.perf_counter()
        pl = epitaxial_place(sp, params.seed)
        cost = total_cost(sp, pl)
        rep = RunReport("epitaxial", 1, params.seed, "none", 0, 0, cost, cost,
                        (time.perf_counter() - t0) * 1000.0)
    elif algo == "ls":
        if initial is not None:
            raise InvalidInputError("ls always starts from a random placement")
        pl, _, rep = ls_run(sp, LsParams(params.budget, params.pr, params.seed),
                            trajectory=trajectory, checkpoint_every=checkpoint_every)
    elif algo == "ls-par":
        pl, _, rep = ls_par_run(sp, params, initial=initial, trajectory=trajectory,
                                checkpoint_every=checkpoint_every)
    elif algo == "alg1":
        pl, _, rep = alg1_run(sp, params, initial=initial, trajectory=trajectory,
                              checkpoint_every=checkpoint_every)
    elif algo == "alg2":
        pl, _, rep = alg2_run(sp, params, initial=initial, trajectory=trajectory,
                              checkpoint_every=checkpoint_every)
    else:
        raise InvalidInputError(f"unknown algorithm {algo!r}")
    rep.instance = instance
    return pl, rep


# -- worked example replay ---------------------------------------------------

def load_script(path) -> tuple[SelectionScript, dict]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return SelectionScript.from_dict(data), data


def replay(script_path=None, probes_path=None, placement_path=None):
    """Run the scripted worked example; returns ``(probes, start, best, bestCOST, report)``."""
    script, meta = load_script(script_path or data_path("example16.script.json"))
    sp = read_probes_file(probes_path or data_path("example16.probes"))
    start = read_placement_file(placement_path or data_path("example16.placement"), sp)
    params = SearchParams(workers=int(meta.get("workers", 3)),
                          budget=RoundBudget.rounds(int(meta.get("rounds", 4))),
                          **meta.get("params", {}))
    run = alg1_run if meta.get("algorithm", "alg1") == "alg1" else alg2_run
    best, best_cost, rep = run(sp, params, script, initial=start, trace=True, debug=True)
    return sp, start, best, best_cost, rep


def _avg(cost: int, denom: int) -> str:
    f = Fraction(cost, denom)
    return f"{cost}/{denom} ({math.floor(f * 100) / 100:.2f})"


def format_trace(sp: ProbeSet, start: Placement, best_cost: int, rep: RunReport) -> str:
    denom = neighbor_pair_count(sp.dim)
    cost0 = total_cost(sp, start)
    out = [f"INIT: COST={cost0} bestCOST={cost0} average={_avg(cost0, denom)}"]
    cost, sa, myub = cost0, 0, 0
    for rec in rep.trace or []:
        out.append(f"Step {rec.round}: OK=0 nrt=0 sa={sa} myub={myub} COST={cost}")
        for t in rec.trials:
            parts = [f"P{p.worker} ({p.a.row},{p.a.col})&({p.b.row},{p.b.col}) "
                     f"localcost={p.localcost} newlocalcost={p.newlocalcost}" for p in t.proposals]
            out.append(f"  Substep {t.nrt}: " + "; ".join(parts))
            if t.source is not None:
                out.append(f"    source P{t.source} (improving or equal) -> COST={t.cost}")
            elif t.uphill_source is not None:
                who = ",".join(f"P{w}" for w, _, _ in t.uphill)
                out.append(f"    uphill accepted at {who}; source P{t.uphill_source} -> COST={t.cost}")
            else:
                out.append("    no swap")
        avg = _avg(rec.cost, denom) if rec.average is not None else "n/a"
        out.append(f"  Update: COST={rec.cost} average={avg} bestCOST={rec.best_cost} "
                   f"sa={rec.sa} myub={rec.myub}")
        cost, sa, myub = rec.cost, rec.sa, rec.myub
    out.append(f"Step {rep.rounds_executed + 1}: budget exhausted")
    out.append(f"bestCOST={best_cost}")
    return "\n".join(out) + "\n"
