"""Constructive witnesses: the two explicit 3-cube colorings, the
zero-interval lift onto G x K2, harmonic colorings, the palette-shrinking
shift sequence, and interval-on-one-part colorings for regular bipartite
graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import (
    Graph,
    Bipartition,
    GraphError,
    hypercube,
    cartesian_product_k2,
    bipartition,
    matching_decomposition,
)
from .coloring import (
    EdgeColoring,
    ColoringError,
    validate,
    spectrum,
    is_interval,
    spectrum_report,
    chromatic_index,
)

__all__ = [
    "ShiftSequence",
    "WitnessCertificate",
    "q3_phi",
    "q3_psi",
    "lift_zero",
    "is_harmonic",
    "shift_step",
    "shift_sequence",
    "preserves_interval_at",
    "block_harmonic",
    "interval_on_part",
    "witness_q3_phi",
    "witness_q3_psi",
    "witness_lift_chain",
    "witness_interval_part",
]

# The explicit 3-cube colorings below are written on two opposite 4-cycles of
# the canonical cube: X walks (0,1,3,2), Y is its translate across bit 2.
# This embedding is data; any fixed one works, this one is pinned for
# reproducibility.
_X = (0, 1, 3, 2)
_Y = (4, 5, 7, 6)


def _from_pairs(g: Graph, t: int, pair_colors: dict) -> EdgeColoring:
    colors = [0] * g.edge_count
    for (u, v), col in pair_colors.items():
        colors[g.edge_index(u, v)] = col
    return validate(g, EdgeColoring(t, tuple(colors)))


def q3_phi() -> EdgeColoring:
    """4-coloring of the 3-cube with no interval-spectrum vertex (f = 0):
    color 1 on alternating cycle edges, 2 and 3 on the remaining cycle edges
    of each 4-cycle, 4 on the rungs."""
    g = hypercube(3)
    x1, x2, x3, x4 = _X
    y1, y2, y3, y4 = _Y
    pairs = {
        (x1, x2): 1, (x3, x4): 1, (y1, y2): 1, (y3, y4): 1,
        (x1, x4): 2, (x2, x3): 2,
        (y1, y4): 3, (y2, y3): 3,
        (x1, y1): 4, (x2, y2): 4, (x3, y3): 4, (x4, y4): 4,
    }
    return _from_pairs(g, 4, pairs)


def q3_psi() -> EdgeColoring:
    """Bijective 12-coloring of the 3-cube with exactly 5 interval-spectrum
    vertices, harmonic for degree 3."""
    g = hypercube(3)
    x1, x2, x3, x4 = _X
    y1, y2, y3, y4 = _Y
    pairs = {
        (x1, y1): 1, (y1, y2): 2, (y1, y4): 3, (y3, y4): 4,
        (x4, y4): 5, (x1, x4): 6, (x3, x4): 7, (x3, y3): 8,
        (x2, x3): 9, (x2, y2): 10, (x1, x2): 11, (y2, y3): 12,
    }
    return _from_pairs(g, 12, pairs)


def lift_zero(g: Graph, c: EdgeColoring) -> EdgeColoring:
    """Lift an (r+1)-coloring with f = 0 of an r-regular graph (r >= 3) to an
    (r+2)-coloring with f = 0 of the product with a single edge.

    Both copies keep their colors, every rung gets the fresh color r+2.  The
    new color sits above the old maximum, so it can never close an internal
    gap: each lifted spectrum stays non-interval.
    """
    validate(g, c)
    if not g.is_regular:
        raise GraphError("lift_zero needs a regular graph")
    r = g.max_degree
    if r < 3:
        raise GraphError(f"lift_zero needs degree >= 3, got {r}")
    if c.t != r + 1:
        raise ColoringError(f"lift_zero needs palette r+1 = {r + 1}, got {c.t}")
    if spectrum_report(g, c).f != 0:
        raise ColoringError("lift_zero needs a coloring with f = 0")
    n = g.vertex_count
    product = cartesian_product_k2(g)
    colors = []
    for u, v in product.edges:
        if v < n:
            colors.append(c.color_of[g.edge_index(u, v)])
        elif u >= n:
            colors.append(c.color_of[g.edge_index(u - n, v - n)])
        else:
            colors.append(r + 2)
    lifted = validate(product, EdgeColoring(r + 2, tuple(colors)))
    if spectrum_report(product, lifted).f != 0:
        raise RuntimeError("internal: lifted coloring has an interval vertex")
    return lifted


def is_harmonic(g: Graph, c: EdgeColoring) -> bool:
    """True iff merging color classes congruent mod Δ always yields a
    matching.  Defined only when the chromatic index equals Δ."""
    delta = g.max_degree
    if chromatic_index(g) != delta:
        raise ColoringError(
            "harmonic colorings are defined only when the chromatic index "
            "equals the maximum degree"
        )
    validate(g, c)
    for i in range(1, delta + 1):
        seen = set()
        for ei, col in enumerate(c.color_of):
            if col % delta == i % delta:
                u, v = g.edges[ei]
                if u in seen or v in seen:
                    return False
                seen.add(u)
                seen.add(v)
    return True


def shift_step(g: Graph, c: EdgeColoring) -> EdgeColoring:
    """One palette-shrinking step: every edge carrying the maximum color t
    is recolored t - Δ; all other edges keep their color.  Needs a harmonic
    input; the result is again harmonic with palette t - 1."""
    delta = g.max_degree
    if c.t == delta:
        raise ColoringError("palette already equals the maximum degree")
    if not is_harmonic(g, c):
        raise ColoringError("shift_step needs a harmonic coloring")
    new = tuple(
        col - delta if col == c.t else col for col in c.color_of
    )
    return validate(g, EdgeColoring(c.t - 1, new))


@dataclass(frozen=True)
class ShiftSequence:
    """The full chain of shift steps from a harmonic base coloring down to
    palette Δ; steps[j] has palette t - j and steps[0] is the base."""

    graph: Graph
    base: EdgeColoring
    steps: tuple[EdgeColoring, ...]

    def __post_init__(self):
        if not self.steps or self.steps[0] != self.base:
            raise ColoringError("shift sequence must start at its base")
        for j, s in enumerate(self.steps):
            if s.t != self.base.t - j:
                raise ColoringError("shift sequence palettes must drop by one")

    def member_with_palette(self, t: int) -> EdgeColoring:
        j = self.base.t - t
        if not (0 <= j < len(self.steps)):
            raise ColoringError(f"no member with palette {t}")
        return self.steps[j]


def shift_sequence(g: Graph, c: EdgeColoring) -> ShiftSequence:
    """All shift steps from c down to the Δ-palette endpoint.  Each member is
    validated and checked harmonic as it is produced."""
    delta = g.max_degree
    if not is_harmonic(g, c):
        raise ColoringError("shift_sequence needs a harmonic base coloring")
    steps = [c]
    while steps[-1].t > delta:
        steps.append(shift_step(g, steps[-1]))
        if not is_harmonic(g, steps[-1]):
            raise RuntimeError("internal: shift step broke harmonicity")
    return ShiftSequence(g, c, tuple(steps))


def preserves_interval_at(seq: ShiftSequence, z0: int) -> bool:
    """True iff every member of the sequence keeps an interval spectrum at
    z0.  Requires deg(z0) = Δ and an interval base spectrum; under those
    preconditions this always holds, so it doubles as a runtime assertion."""
    g = seq.graph
    if g.degree(z0) != g.max_degree:
        raise ColoringError(
            f"vertex {z0} has degree {g.degree(z0)}, need Δ = {g.max_degree}"
        )
    if not is_interval(spectrum(g, seq.base, z0)):
        raise ColoringError(f"base coloring is not interval at vertex {z0}")
    return all(is_interval(spectrum(g, s, z0)) for s in seq.steps)


def block_harmonic(
    g: Graph, b: Bipartition, part_order=None
) -> EdgeColoring:
    """Bijective |E|-coloring of a regular bipartite graph, interval on all
    of part_r and harmonic.

    With matchings M_1..M_r and part_r enumerated v_0..v_{k-1}, the M_j edge
    at v_i gets color i*r + j, so v_i sees exactly [i*r + 1, i*r + r].
    """
    matchings = matching_decomposition(g, b)
    r = g.max_degree
    order = list(part_order) if part_order is not None else sorted(b.part_r)
    if sorted(order) != sorted(b.part_r):
        raise GraphError("part_order must enumerate part_r exactly")
    at_vertex = []  # per matching: vertex -> edge index
    for mat in matchings:
        lookup = {}
        for ei in mat:
            u, v = g.edges[ei]
            lookup[u] = ei
            lookup[v] = ei
        at_vertex.append(lookup)
    colors = [0] * g.edge_count
    for i, v in enumerate(order):
        for j, lookup in enumerate(at_vertex, start=1):
            colors[lookup[v]] = i * r + j
    c = validate(g, EdgeColoring(g.edge_count, tuple(colors)))
    if not is_harmonic(g, c):
        raise RuntimeError("internal: block coloring is not harmonic")
    return c


def interval_on_part(g: Graph, b: Bipartition, t: int) -> EdgeColoring:
    """Proper surjective t-coloring of a regular bipartite graph, interval on
    every part_r vertex, for any t from Δ up to |E| (shift the block
    coloring down to the requested palette)."""
    delta = g.max_degree
    if not (delta <= t <= g.edge_count):
        raise ColoringError(f"t={t} outside [{delta}, {g.edge_count}]")
    seq = shift_sequence(g, block_harmonic(g, b))
    c = seq.member_with_palette(t)
    rep = spectrum_report(g, c)
    if not b.part_r <= rep.v_int:
        raise RuntimeError("internal: shifted coloring lost intervalness on part_r")
    return c


# -- machine-checkable certificates -----------------------------------------


@dataclass(frozen=True)
class WitnessCertificate:
    """A graph, a coloring, and one claim about it; check() re-validates the
    coloring and re-evaluates the claim from scratch, so certificates are
    self-contained."""

    graph: Graph
    coloring: EdgeColoring
    claim: dict

    KINDS = ("f_equals", "interval_on", "harmonic", "mu2_lower_bound", "mu11_zero")

    def check(self) -> tuple[bool, str]:
        try:
            validate(self.graph, self.coloring)
        except ColoringError as exc:
            return False, f"coloring invalid: {exc}"
        kind = self.claim.get("kind")
        if kind == "f_equals":
            want = int(self.claim["value"])
            got = spectrum_report(self.graph, self.coloring).f
            return got == want, f"f={got}, claimed {want}"
        if kind == "interval_on":
            vs = [int(v) for v in self.claim["vertices"]]
            rep = spectrum_report(self.graph, self.coloring)
            missing = [v for v in vs if v not in rep.v_int]
            if missing:
                return False, f"not interval at {missing}"
            return True, f"interval on all {len(vs)} claimed vertices"
        if kind == "harmonic":
            ok = is_harmonic(self.graph, self.coloring)
            return ok, "harmonic" if ok else "mod-Δ classes are not matchings"
        if kind == "mu2_lower_bound":
            t, want = int(self.claim["t"]), int(self.claim["value"])
            if self.coloring.t != t:
                return False, f"palette {self.coloring.t}, claimed t={t}"
            got = spectrum_report(self.graph, self.coloring).f
            return got >= want, f"f={got}, claimed >= {want} at t={t}"
        if kind == "mu11_zero":
            t = int(self.claim["t"])
            if self.coloring.t != t:
                return False, f"palette {self.coloring.t}, claimed t={t}"
            got = spectrum_report(self.graph, self.coloring).f
            return got == 0, f"f={got}, claimed 0 at t={t}"
        return False, f"unknown claim kind {kind!r}"

    def to_json_obj(self) -> dict:
        return {
            "graph": self.graph.to_json_obj(),
            "coloring": self.coloring.to_json_obj(),
            "claim": self.claim,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "WitnessCertificate":
        return cls(
            Graph.from_json_obj(obj["graph"]),
            EdgeColoring.from_json_obj(obj["coloring"]),
            dict(obj["claim"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "WitnessCertificate":
        return cls.from_json_obj(json.loads(text))


def witness_q3_phi() -> WitnessCertificate:
    return WitnessCertificate(hypercube(3), q3_phi(), {"kind": "f_equals", "value": 0})


def witness_q3_psi() -> WitnessCertificate:
    return WitnessCertificate(hypercube(3), q3_psi(), {"kind": "f_equals", "value": 5})


def witness_lift_chain(times: int) -> WitnessCertificate:
    """Apply the zero-interval lift `times` times starting from the 3-cube
    4-coloring; each step moves to the next cube and adds one color."""
    if times < 0:
        raise ValueError("times must be >= 0")
    g = hypercube(3)
    c = q3_phi()
    for _ in range(times):
        c = lift_zero(g, c)
        g = cartesian_product_k2(g)
    return WitnessCertificate(g, c, {"kind": "mu11_zero", "t": c.t})


def witness_interval_part(n: int, t: int) -> WitnessCertificate:
    g = hypercube(n)
    b = bipartition(g)
    c = interval_on_part(g, b, t)
    return WitnessCertificate(
        g, c, {"kind": "interval_on", "vertices": sorted(b.part_r)}
    )
