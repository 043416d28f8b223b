"""Run reports and their CSV form."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

CSV_FIELDS = (
    "instance",
    "algorithm",
    "workers",
    "seed",
    "budget_type",
    "budget",
    "rounds_executed",
    "best_cost",
    "final_cost",
    "elapsed_ms",
)


@dataclass
class Checkpoint:
    rounds: int
    elapsed_ms: float
    best_cost: int


@dataclass
class RunReport:
    algorithm: str
    workers: int
    seed: int
    budget_type: str
    budget: float
    rounds_executed: int = 0
    best_cost: int = 0
    final_cost: int = 0
    elapsed_ms: float = 0.0
    instance: str = ""
    trajectory: list[int] | None = None
    checkpoints: list[Checkpoint] = field(default_factory=list)
    # per-algorithm counters: trials, swap_rounds, uphill_rounds, break_rounds, ...
    counters: dict[str, int] = field(default_factory=dict)
    # RoundRecord list from traced reference runs
    trace: list | None = None

    def csv_row(self, timing: bool | None = None) -> dict[str, str]:
        """One CSV record.

        ``elapsed_ms`` is left blank for round-budget and budget-free runs
        unless ``timing`` is set, so that those rows are byte-reproducible.
        """
        if timing is None:
            timing = self.budget_type == "seconds"
        budget = self.budget
        if budget == int(budget):
            budget = int(budget)
        return {
            "instance": self.instance,
            "algorithm": self.algorithm,
            "workers": str(self.workers),
            "seed": str(self.seed),
            "budget_type": self.budget_type,
            "budget": str(budget),
            "rounds_executed": str(self.rounds_executed),
            "best_cost": str(self.best_cost),
            "final_cost": str(self.final_cost),
            "elapsed_ms": f"{self.elapsed_ms:.0f}" if timing else "",
        }


def format_csv(reports, header: bool = True, timing: bool | None = None) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    if header:
        w.writeheader()
    for r in reports:
        w.writerow(r.csv_row(timing))
    return buf.getvalue()


def read_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))
