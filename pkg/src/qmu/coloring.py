"""Proper edge colorings, vertex spectra, the interval predicate, and the
count f of interval-spectrum vertices."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bipartition, NotBipartiteError

__all__ = [
    "EdgeColoring",
    "SpectrumReport",
    "ColoringError",
    "AdjacentSameColorError",
    "UnusedColorError",
    "ColorRangeError",
    "SearchCapError",
    "validate",
    "spectrum",
    "is_interval",
    "spectrum_report",
    "reverse_colors",
    "chromatic_index",
    "random_bijective_coloring",
    "random_proper_coloring",
]


class ColoringError(ValueError):
    """An edge coloring violates a properness/surjectivity invariant."""


class AdjacentSameColorError(ColoringError):
    def __init__(self, vertex, edge_a, edge_b, color):
        self.vertex, self.edge_a, self.edge_b, self.color = vertex, edge_a, edge_b, color
        super().__init__(
            f"edges {edge_a} and {edge_b} share vertex {vertex} and color {color}"
        )


class UnusedColorError(ColoringError):
    def __init__(self, color):
        self.color = color
        super().__init__(f"color {color} is unused (palette must be surjective)")


class ColorRangeError(ColoringError):
    def __init__(self, edge, color, t):
        self.edge, self.color, self.t = edge, color, t
        super().__init__(f"edge {edge} has color {color} outside [1, {t}]")


class SearchCapError(ValueError):
    """An exact computation exceeds the configured desk-scale cap."""


@dataclass(frozen=True)
class EdgeColoring:
    """Colors 1..t assigned to edges by canonical edge index.

    Always run instances through :func:`validate` before using them; every
    other module assumes properness and surjectivity.
    """

    t: int
    color_of: tuple[int, ...]

    def color_class(self, j: int) -> tuple[int, ...]:
        """Edge indices carrying color j."""
        return tuple(i for i, c in enumerate(self.color_of) if c == j)

    def to_json_obj(self) -> dict:
        return {"t": self.t, "colors": list(self.color_of)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EdgeColoring":
        return cls(int(obj["t"]), tuple(int(c) for c in obj["colors"]))


@dataclass(frozen=True)
class SpectrumReport:
    """Per-vertex spectra, the interval-spectrum vertex set, and its size f."""

    spectra: tuple[tuple[int, ...], ...]
    v_int: frozenset
    f: int


def validate(g: Graph, c: EdgeColoring) -> EdgeColoring:
    """Check that c is a proper surjective edge t-coloring of g.

    Raises ColorRangeError, AdjacentSameColorError or UnusedColorError with
    the offending edge/vertex/color; returns c unchanged when valid.  This is
    the single constructor path for colorings entering the rest of the
    package.
    """
    if c.t < 1:
        raise ColoringError(f"palette size {c.t} must be positive")
    if len(c.color_of) != g.edge_count:
        raise ColoringError(
            f"coloring has {len(c.color_of)} entries for {g.edge_count} edges"
        )
    for i, col in enumerate(c.color_of):
        if not (1 <= col <= c.t):
            raise ColorRangeError(i, col, c.t)
    for v in range(g.vertex_count):
        seen = {}
        for _, ei in g.adjacency[v]:
            col = c.color_of[ei]
            if col in seen:
                raise AdjacentSameColorError(v, seen[col], ei, col)
            seen[col] = ei
    used = set(c.color_of)
    for col in range(1, c.t + 1):
        if col not in used:
            raise UnusedColorError(col)
    return c


def spectrum(g: Graph, c: EdgeColoring, x: int) -> tuple[int, ...]:
    """Sorted colors on edges incident to x; has exactly deg(x) entries."""
    if not (0 <= x < g.vertex_count):
        raise ColoringError(f"vertex {x} out of range")
    return tuple(sorted(c.color_of[ei] for _, ei in g.adjacency[x]))


def is_interval(s) -> bool:
    """True iff s is a nonempty set of consecutive integers."""
    vals = sorted(set(s))
    if not vals:
        raise ColoringError("empty spectrum has no interval status")
    return vals[-1] - vals[0] + 1 == len(vals)


def spectrum_report(g: Graph, c: EdgeColoring) -> SpectrumReport:
    """All spectra of a validated coloring, plus v_int and f = |v_int|."""
    spectra = tuple(spectrum(g, c, x) for x in range(g.vertex_count))
    v_int = frozenset(x for x, s in enumerate(spectra) if is_interval(s))
    return SpectrumReport(spectra, v_int, len(v_int))


def reverse_colors(c: EdgeColoring) -> EdgeColoring:
    """Reflect the palette: color i becomes t+1-i.  Preserves properness,
    surjectivity, and every intervalness decision."""
    return EdgeColoring(c.t, tuple(c.t + 1 - col for col in c.color_of))


def chromatic_index(g: Graph, edge_cap: int = 24) -> int:
    """Minimum palette size admitting a proper edge coloring.

    Bipartite graphs get Δ outright; other graphs are decided between Δ and
    Δ+1 by backtracking, capped at edge_cap edges.
    """
    delta = g.max_degree
    try:
        bipartition(g)
        return delta
    except NotBipartiteError:
        pass
    if g.edge_count > edge_cap:
        raise SearchCapError(
            f"chromatic_index search capped at {edge_cap} edges "
            f"(graph has {g.edge_count})"
        )
    return delta if _colorable_with(g, delta) else delta + 1


def _colorable_with(g: Graph, t: int) -> bool:
    """Backtracking test for a proper edge coloring using colors within [1,t]."""
    m = g.edge_count
    colors = [0] * m

    def ok(ei, col):
        u, v = g.edges[ei]
        for _, ej in g.adjacency[u]:
            if colors[ej] == col:
                return False
        for _, ej in g.adjacency[v]:
            if colors[ej] == col:
                return False
        return True

    def rec(ei):
        if ei == m:
            return True
        for col in range(1, t + 1):
            if ok(ei, col):
                colors[ei] = col
                if rec(ei + 1):
                    return True
                colors[ei] = 0
        return False

    return rec(0)


def random_bijective_coloring(g: Graph, rng) -> EdgeColoring:
    """Uniform random proper coloring with t = |E| (a random bijection;
    properness is automatic when every edge gets a distinct color)."""
    m = g.edge_count
    perm = rng.permutation(m) + 1
    return validate(g, EdgeColoring(m, tuple(int(c) for c in perm)))


def random_proper_coloring(g: Graph, t: int, rng) -> EdgeColoring:
    """Random proper surjective t-coloring by randomized backtracking.

    Complete: colorings exist for every t between the chromatic index and
    |E|, and the search is exhaustive, so this always returns.
    """
    m = g.edge_count
    if not (1 <= t <= m):
        raise ColoringError(f"t={t} outside [1, {m}]")
    colors = [0] * m
    use_count = [0] * (t + 1)

    def rec(ei, used):
        if ei == m:
            return used == t
        u, v = g.edges[ei]
        banned = set()
        for _, ej in g.adjacency[u]:
            banned.add(colors[ej])
        for _, ej in g.adjacency[v]:
            banned.add(colors[ej])
        order = rng.permutation(t) + 1
        for col in order:
            col = int(col)
            if col in banned:
                continue
            new_used = used + (use_count[col] == 0)
            if (m - ei - 1) < (t - new_used):
                continue  # cannot reach surjectivity
            colors[ei] = col
            use_count[col] += 1
            if rec(ei + 1, new_used):
                return True
            use_count[col] -= 1
            colors[ei] = 0
        return False

    if not rec(0, 0):
        raise ColoringError(f"no proper surjective {t}-coloring found (t invalid?)")
    return validate(g, EdgeColoring(t, tuple(colors)))
