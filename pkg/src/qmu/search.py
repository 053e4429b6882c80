"""Exact computation of the interval-vertex extremes mu1/mu2 per palette
size, their four aggregates over all palettes, feasibility of interval-on-R
colorings, the closed forms for hypercubes, and a brute-force oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, bipartition, NotBipartiteError
from .coloring import (
    EdgeColoring,
    SearchCapError,
    chromatic_index,
    spectrum_report,
    validate,
)
from . import backend as _backend

__all__ = [
    "SearchBudget",
    "MuResult",
    "MuRow",
    "Aggregate",
    "MuTable",
    "FeasibilityResult",
    "brute_force_mu",
    "mu_exact",
    "mu_table",
    "closed_form_qn",
    "interval_feasible",
    "interval_coloring_range",
    "mu_inequalities_check",
]

# single int64 holds the color bitmask, so exact search stops at 62 colors
MAX_SEARCH_COLORS = 62

EXACT = "exact"
LOWER_BOUND = "lower_bound"
UPPER_BOUND = "upper_bound"
INTERVAL = "interval"

_SLICE_NODES = 4_000_000


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one exact search: node count, wall seconds, worker count.

    node_limit is the deterministic budget; time_limit is a wall-clock
    safety net (results stay correct but which rows complete may vary with
    machine speed).  thread_count is validated and reserved; the engine is
    single-threaded, so results never depend on it.
    """

    node_limit: int = 2_000_000_000
    time_limit: float | None = None
    thread_count: int = 1

    def __post_init__(self):
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.thread_count <= 0:
            raise ValueError("thread_count must be positive")


@dataclass(frozen=True)
class MuResult:
    """Outcome of one optimization: value with status, plus a witness
    coloring achieving the value whenever the status is exact."""

    value: int
    status: str
    witness: EdgeColoring | None
    nodes: int


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool | None  # None: unknown (budget exhausted)
    witness: EdgeColoring | None
    nodes: int


def _branch_order(g: Graph) -> list[int]:
    """Edges sorted by endpoint degree sum (descending), then canonical index."""
    degs = g.degrees
    return sorted(
        range(g.edge_count),
        key=lambda i: (-(degs[g.edges[i][0]] + degs[g.edges[i][1]]), i),
    )


def _color_order(t: int, objective: str) -> list[int]:
    """Color trial order: ascending for max (packs spectra into intervals),
    low/high zigzag for min (tears gaps early so poor incumbents die fast)."""
    if objective == "max":
        return list(range(1, t + 1))
    order = []
    lo, hi = 1, t
    while lo <= hi:
        order.append(lo)
        if hi != lo:
            order.append(hi)
        lo += 1
        hi -= 1
    return order


def _search_state(g: Graph, t: int):
    m, n = g.edge_count, g.vertex_count
    assigned = np.zeros(m, dtype=np.int64)
    trial = np.zeros(m, dtype=np.int64)
    mask = np.zeros(n, dtype=np.int64)
    remv = np.array(g.degrees, dtype=np.int64)
    vmin = np.zeros(n, dtype=np.int64)
    vmax = np.zeros(n, dtype=np.int64)
    vstat = np.zeros(n, dtype=np.int64)
    save = np.zeros((m, 2, 3), dtype=np.int64)
    color_use = np.zeros(t + 1, dtype=np.int64)
    ctrl = np.zeros(8, dtype=np.int64)
    best_colors = np.zeros(m, dtype=np.int64)
    return (assigned, trial, mask, remv, vmin, vmax, vstat, save, color_use,
            ctrl, best_colors)


def _check_palette(g: Graph, t: int) -> int:
    chi = chromatic_index(g)
    if not (chi <= t <= g.edge_count):
        raise ValueError(
            f"t={t} outside [{chi}, {g.edge_count}] for this graph"
        )
    if t > MAX_SEARCH_COLORS:
        raise SearchCapError(
            f"exact search supports at most {MAX_SEARCH_COLORS} colors, got t={t}"
        )
    return chi


def _max_seed(g: Graph, t: int) -> EdgeColoring | None:
    """Deterministic warm-start witness for the max objective: the
    shift-derived coloring interval on one part, when g is regular bipartite."""
    if not g.is_regular:
        return None
    try:
        b = bipartition(g)
    except NotBipartiteError:
        return None
    from .constructions import interval_on_part

    return interval_on_part(g, b, t)


def mu_exact(
    g: Graph,
    t: int,
    objective: str,
    budget: SearchBudget | None = None,
    symmetry: bool = True,
    backend: str | None = None,
) -> MuResult:
    """Exact min or max of the interval-vertex count f over all proper
    surjective t-colorings, by resumable branch-and-bound.

    Returns the exact value with a witness coloring when the search finishes
    within budget; otherwise the incumbent with a lower_bound (max) or
    upper_bound (min) status — never a wrong "exact".
    """
    if objective not in ("min", "max"):
        raise ValueError("objective must be 'min' or 'max'")
    _check_palette(g, t)
    budget = budget or SearchBudget()
    m, n = g.edge_count, g.vertex_count
    order = _branch_order(g)
    eu = np.array([g.edges[i][0] for i in order], dtype=np.int64)
    ev = np.array([g.edges[i][1] for i in order], dtype=np.int64)
    deg = np.array(g.degrees, dtype=np.int64)
    corder = np.array([0] + _color_order(t, objective), dtype=np.int64)
    first_cap = (t + 1) // 2 if symmetry else t
    is_max = 1 if objective == "max" else 0

    state = _search_state(g, t)
    ctrl = state[9]
    seed = None
    if is_max:
        seed = _max_seed(g, t)
        ctrl[3] = spectrum_report(g, seed).f if seed is not None else -1
    else:
        ctrl[3] = n + 1

    kern = _backend.kernel("mu_branch_bound", backend)
    deadline = (
        time.monotonic() + budget.time_limit if budget.time_limit else None
    )
    node_budget = budget.node_limit
    exhausted = False
    while True:
        before = int(ctrl[5])
        status = kern(eu, ev, deg, corder, t, first_cap, is_max,
                      *state, min(node_budget - before, _SLICE_NODES))
        if status in (0, 2):  # done or provably optimal
            break
        if int(ctrl[5]) >= node_budget:
            exhausted = True
            break
        if deadline is not None and time.monotonic() > deadline:
            exhausted = True
            break

    value = int(ctrl[3])
    nodes = int(ctrl[5])
    improved = bool(ctrl[6])
    witness = None
    if improved:
        canonical = [0] * m
        for pos, ei in enumerate(order):
            canonical[ei] = int(state[10][pos])
        witness = validate(g, EdgeColoring(t, tuple(canonical)))
    elif seed is not None:
        witness = seed

    if not exhausted:
        if witness is None:
            raise RuntimeError(
                f"internal: no proper surjective {t}-coloring found, "
                "but one must exist for a valid palette size"
            )
        actual = spectrum_report(g, witness).f
        if actual != value:
            raise RuntimeError("internal: witness value mismatch")
        return MuResult(value, EXACT, witness, nodes)
    if is_max:
        # incumbent (or trivial 0) is a valid lower bound for the max
        return MuResult(max(value, 0), LOWER_BOUND, witness, nodes)
    return MuResult(min(value, n), UPPER_BOUND, witness if improved else None, nodes)


def brute_force_mu(g: Graph, t: int) -> tuple[int, int]:
    """Oracle: min and max of f over ALL proper surjective t-colorings by
    plain recursive enumeration.  Independent of the branch-and-bound path;
    capped at 8 edges."""
    m = g.edge_count
    if m > 8:
        raise SearchCapError(f"brute force capped at 8 edges, got {m}")
    chi = chromatic_index(g)
    if not (chi <= t <= m):
        raise ValueError(f"t={t} outside [{chi}, {m}]")
    colors = [0] * m
    lo = [g.vertex_count + 1]
    hi = [-1]

    def f_of() -> int:
        count = 0
        for v in range(g.vertex_count):
            s = sorted(colors[ei] for _, ei in g.adjacency[v])
            if s[-1] - s[0] + 1 == len(s):
                count += 1
        return count

    def rec(ei: int):
        if ei == m:
            if len(set(colors)) == t:
                f = f_of()
                if f < lo[0]:
                    lo[0] = f
                if f > hi[0]:
                    hi[0] = f
            return
        u, v = g.edges[ei]
        banned = set()
        for _, ej in g.adjacency[u]:
            banned.add(colors[ej])
        for _, ej in g.adjacency[v]:
            banned.add(colors[ej])
        for col in range(1, t + 1):
            if col not in banned:
                colors[ei] = col
                rec(ei + 1)
                colors[ei] = 0

    rec(0)
    if hi[0] < 0:
        raise RuntimeError(
            f"internal: no proper surjective {t}-coloring exists, "
            "impossible for t in [chromatic index, edge count]"
        )
    return lo[0], hi[0]


@dataclass(frozen=True)
class MuRow:
    """One palette size: bounds for mu1 and mu2 (lo == hi when exact)."""

    t: int
    mu1_lo: int
    mu1_hi: int
    mu1_status: str
    mu2_lo: int
    mu2_hi: int
    mu2_status: str
    mu1_witness: EdgeColoring | None = field(default=None, compare=False)
    mu2_witness: EdgeColoring | None = field(default=None, compare=False)

    @property
    def exact(self) -> bool:
        return self.mu1_status == EXACT and self.mu2_status == EXACT


@dataclass(frozen=True)
class Aggregate:
    lo: int
    hi: int
    status: str  # exact | interval

    @property
    def value(self) -> int:
        if self.status != EXACT:
            raise ValueError(f"aggregate is not exact: [{self.lo}, {self.hi}]")
        return self.lo

    def __str__(self):
        return str(self.lo) if self.status == EXACT else f"{self.lo}:{self.hi}"


@dataclass(frozen=True)
class MuTable:
    """Per-palette rows over t in [chromatic index, |E|] plus the four
    aggregates; aggregates are exact only when every row is."""

    rows: tuple[MuRow, ...]
    mu11: Aggregate
    mu12: Aggregate
    mu21: Aggregate
    mu22: Aggregate

    @property
    def all_exact(self) -> bool:
        return all(r.exact for r in self.rows)

    def aggregates(self) -> tuple[Aggregate, Aggregate, Aggregate, Aggregate]:
        return (self.mu11, self.mu12, self.mu21, self.mu22)


def _aggregate(rows, lo_key, hi_key, status_key, reducer) -> Aggregate:
    los = [getattr(r, lo_key) for r in rows]
    his = [getattr(r, hi_key) for r in rows]
    all_exact = all(getattr(r, status_key) == EXACT for r in rows)
    lo, hi = reducer(los), reducer(his)
    return Aggregate(lo, hi, EXACT if all_exact else INTERVAL)


def mu_table(
    g: Graph,
    budget: SearchBudget | None = None,
    symmetry: bool = True,
    backend: str | None = None,
) -> MuTable:
    """Rows for every valid palette size; budget overruns and over-cap rows
    degrade to honest bounds and poison the aggregates to intervals."""
    chi = chromatic_index(g)
    m, n = g.edge_count, g.vertex_count
    rows = []
    for t in range(chi, m + 1):
        try:
            rmin = mu_exact(g, t, "min", budget, symmetry, backend)
            rmax = mu_exact(g, t, "max", budget, symmetry, backend)
        except SearchCapError:
            rows.append(MuRow(t, 0, n, INTERVAL, 0, n, INTERVAL))
            continue
        mu1_lo, mu1_hi = (
            (rmin.value, rmin.value) if rmin.status == EXACT else (0, rmin.value)
        )
        mu2_lo, mu2_hi = (
            (rmax.value, rmax.value) if rmax.status == EXACT else (rmax.value, n)
        )
        if rmin.status == EXACT and rmax.status == EXACT and mu1_lo > mu2_lo:
            raise RuntimeError(f"internal: mu1 > mu2 at t={t}")
        rows.append(
            MuRow(t, mu1_lo, mu1_hi, rmin.status, mu2_lo, mu2_hi, rmax.status,
                  rmin.witness, rmax.witness)
        )
    rows = tuple(rows)
    return MuTable(
        rows,
        mu11=_aggregate(rows, "mu1_lo", "mu1_hi", "mu1_status", min),
        mu12=_aggregate(rows, "mu1_lo", "mu1_hi", "mu1_status", max),
        mu21=_aggregate(rows, "mu2_lo", "mu2_hi", "mu2_status", min),
        mu22=_aggregate(rows, "mu2_lo", "mu2_hi", "mu2_status", max),
    )


def closed_form_qn(n: int) -> tuple[int, int, int, int]:
    """Closed-form (mu11, mu12, mu21, mu22) for the n-dimensional cube."""
    if n < 1:
        raise ValueError("n must be >= 1")
    mu11 = 3 - min(3, n)
    mu12 = mu22 = 2 ** n
    mu21 = 2 ** (n - 1) + (1 if n <= 3 else 0)
    return mu11, mu12, mu21, mu22


def interval_feasible(
    g: Graph,
    r,
    t: int,
    budget: SearchBudget | None = None,
    symmetry: bool = True,
    backend: str | None = None,
) -> FeasibilityResult:
    """Is there a proper surjective t-coloring whose spectrum is an interval
    at every vertex of r?  Backtracking with immediate pruning on any
    r-vertex decided non-interval."""
    rset = set(r)
    if not rset:
        raise ValueError("r must be nonempty")
    for v in rset:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} out of range")
    _check_palette(g, t)
    budget = budget or SearchBudget()
    m = g.edge_count
    order = _branch_order(g)
    eu = np.array([g.edges[i][0] for i in order], dtype=np.int64)
    ev = np.array([g.edges[i][1] for i in order], dtype=np.int64)
    deg = np.array(g.degrees, dtype=np.int64)
    corder = np.array([0] + _color_order(t, "max"), dtype=np.int64)
    rflag = np.array(
        [1 if v in rset else 0 for v in range(g.vertex_count)], dtype=np.int64
    )
    first_cap = (t + 1) // 2 if symmetry else t

    state = _search_state(g, t)
    ctrl = state[9]
    kern = _backend.kernel("interval_feasible_scan", backend)
    deadline = (
        time.monotonic() + budget.time_limit if budget.time_limit else None
    )
    while True:
        before = int(ctrl[5])
        status = kern(eu, ev, deg, corder, t, first_cap, rflag,
                      *state, min(budget.node_limit - before, _SLICE_NODES))
        if status == 3:
            canonical = [0] * m
            for pos, ei in enumerate(order):
                canonical[ei] = int(state[10][pos])
            witness = validate(g, EdgeColoring(t, tuple(canonical)))
            rep = spectrum_report(g, witness)
            if not rset <= rep.v_int:
                raise RuntimeError("internal: witness not interval on r")
            return FeasibilityResult(True, witness, int(ctrl[5]))
        if status == 0:
            return FeasibilityResult(False, None, int(ctrl[5]))
        if int(ctrl[5]) >= budget.node_limit or (
            deadline is not None and time.monotonic() > deadline
        ):
            return FeasibilityResult(None, None, int(ctrl[5]))


def interval_coloring_range(
    g: Graph,
    r,
    budget: SearchBudget | None = None,
    backend: str | None = None,
) -> tuple[int | None, int | None]:
    """Smallest and largest palette size admitting a coloring interval on r
    (None, None) when r lacks the property.  Raises SearchCapError if any
    required feasibility test exhausts its budget."""
    chi = chromatic_index(g)
    m = g.edge_count
    lo = None
    for t in range(chi, m + 1):
        res = interval_feasible(g, r, t, budget, backend=backend)
        if res.feasible is None:
            raise SearchCapError(f"feasibility at t={t} exhausted its budget")
        if res.feasible:
            lo = t
            break
    if lo is None:
        return None, None
    for t in range(m, chi - 1, -1):
        res = interval_feasible(g, r, t, budget, backend=backend)
        if res.feasible is None:
            raise SearchCapError(f"feasibility at t={t} exhausted its budget")
        if res.feasible:
            return lo, t
    raise RuntimeError("internal: lower feasible t exists but no upper one")


def mu_inequalities_check(table: MuTable) -> bool:
    """Both aggregate chains: mu11 <= mu12 <= mu22 and mu11 <= mu21 <= mu22.
    Requires every aggregate to be exact."""
    for agg in table.aggregates():
        if agg.status != EXACT:
            raise ValueError("inequality check requires exact aggregates")
    a, b, c, d = (x.value for x in table.aggregates())
    return a <= b <= d and a <= c <= d
