"""Border length minimization for DNA probe placement on square microarrays."""
from .engine import (
    ReplayError,
    RoundBudget,
    SearchParams,
    SelectionScript,
    SyncDecision,
    WorkerState,
    alg1_run,
    alg2_run,
    ls_par_run,
    select_source,
)
from .heuristics import LsParams, epitaxial_place, ls_run
from .model import (
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
from .oracle import (
    InstanceTooLargeError,
    OracleResult,
    brute_force_optimum,
    generate_probeset,
    verify_incremental,
)
from .report import RunReport
from .rng import Stream

__version__ = "0.1.0"
