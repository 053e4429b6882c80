"""Immutable simple-graph core: canonical edge lists, standard generators,
bipartite machinery, and perfect-matching decompositions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = [
    "Graph",
    "Bipartition",
    "InducedStructure",
    "GraphError",
    "NotBipartiteError",
    "hypercube",
    "path",
    "cycle",
    "complete",
    "cartesian_product_k2",
    "induced_subgraph",
    "bipartition",
    "matching_decomposition",
]


class GraphError(ValueError):
    """A construction would violate a graph invariant."""


class NotBipartiteError(GraphError):
    """Two-coloring failed; carries an odd closed walk as evidence."""

    def __init__(self, odd_walk):
        self.odd_walk = tuple(odd_walk)
        super().__init__(f"not bipartite: odd closed walk {list(odd_walk)}")


@dataclass(frozen=True)
class Graph:
    """Simple, undirected, connected graph with at least one edge.

    Edges are stored sorted lexicographically by (min endpoint, max endpoint),
    so edge indices are stable across runs and safe to use in file formats.
    ``adjacency[v]`` lists ``(neighbor, edge_index)`` pairs in canonical order.
    Instances are immutable and hashable.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple = field(init=False, compare=False, repr=False)
    _edge_index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        n, edges = self.vertex_count, self.edges
        if n < 2:
            raise GraphError("need at least 2 vertices")
        if not edges:
            raise GraphError("need at least one edge")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not normalized (want min first)")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if list(edges) != sorted(edges):
            raise GraphError("edge list not in canonical lexicographic order")

        adj = [[] for _ in range(n)]
        index = {}
        for i, (u, v) in enumerate(edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
            index[(u, v)] = i
        object.__setattr__(self, "adjacency", tuple(tuple(row) for row in adj))
        object.__setattr__(self, "_edge_index", index)

        # connectivity (isolated vertices also fail here)
        seen_v = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w, _ in self.adjacency[u]:
                if w not in seen_v:
                    seen_v.add(w)
                    stack.append(w)
        if len(seen_v) != n:
            raise GraphError("graph is not connected")

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Graph":
        """Build a Graph from any iterable of vertex pairs, canonicalizing order."""
        normalized = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            normalized.append((u, v) if u < v else (v, u))
        if len(set(normalized)) != len(normalized):
            raise GraphError("duplicate edge")
        return cls(vertex_count, tuple(sorted(normalized)))

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    def edge_index(self, u: int, v: int) -> int:
        """Canonical index of edge {u, v}; raises GraphError if absent."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise GraphError(f"no edge {key}") from None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._edge_index

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Graph":
        return cls.from_edges(int(obj["vertices"]), [tuple(e) for e in obj["edges"]])

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_json_obj(json.loads(text))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Bipartition:
    """The two color classes of a bipartite graph; part_r contains vertex 0."""

    part_r: frozenset
    part_l: frozenset


@dataclass(frozen=True)
class InducedStructure:
    """Vertex subset plus the edges it induces.  Unlike Graph this may be
    disconnected or edgeless, so it is a raw structure, not a Graph."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def degrees(self) -> dict:
        d = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d


# -- generators ------------------------------------------------------------


def hypercube(n: int) -> Graph:
    """n-dimensional cube: vertices are 0..2^n-1, edges join ids differing in
    one bit.  n-regular, bipartite by parity of popcount, n*2^(n-1) edges."""
    if n < 1:
        raise GraphError("hypercube needs n >= 1")
    size = 1 << n
    edges = []
    for u in range(size):
        for b in range(n):
            v = u ^ (1 << b)
            if u < v:
                edges.append((u, v))
    return Graph(size, tuple(sorted(edges)))


def path(n: int) -> Graph:
    """Simple path on n vertices, n >= 2."""
    if n < 2:
        raise GraphError("path needs n >= 2")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Simple cycle on n vertices, n >= 3."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, tuple(sorted(edges)))


def complete(n: int) -> Graph:
    """Complete graph on n vertices, n >= 2."""
    if n < 2:
        raise GraphError("complete needs n >= 2")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cartesian_product_k2(g: Graph) -> Graph:
    """Two disjoint copies of g joined by a perfect matching of corresponding
    vertices.  Vertex i of copy 0 keeps id i; copy 1 gets i + |V(g)|."""
    n = g.vertex_count
    edges = []
    for u, v in g.edges:
        edges.append((u, v))
        edges.append((u + n, v + n))
    for i in range(n):
        edges.append((i, i + n))
    return Graph(2 * n, tuple(sorted(edges)))


def induced_subgraph(g: Graph, v0) -> InducedStructure:
    """Edges of g with both endpoints in v0, as a raw (possibly disconnected)
    structure."""
    vs = set(v0)
    if not vs:
        raise GraphError("induced_subgraph needs a nonempty vertex set")
    for v in vs:
        if not (0 <= v < g.vertex_count):
            raise GraphError(f"vertex {v} out of range")
    edges = tuple((u, v) for u, v in g.edges if u in vs and v in vs)
    return InducedStructure(tuple(sorted(vs)), edges)


def bipartition(g: Graph) -> Bipartition:
    """Two-color g by breadth-first layering from vertex 0.

    Raises NotBipartiteError naming an odd closed walk when an odd cycle is
    found.  part_r is the class containing vertex 0.
    """
    color = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    color[0] = 0
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for w, _ in g.adjacency[u]:
            if color[w] == -1:
                color[w] = 1 - color[u]
                parent[w] = u
                queue.append(w)
            elif color[w] == color[u]:
                raise NotBipartiteError(_odd_walk(parent, u, w))
    part_r = frozenset(v for v in range(g.vertex_count) if color[v] == 0)
    part_l = frozenset(v for v in range(g.vertex_count) if color[v] == 1)
    return Bipartition(part_r, part_l)


def _odd_walk(parent, u, w):
    """Closed odd walk through the offending edge (u, w) via BFS-tree paths."""
    anc_u = [u]
    while parent[anc_u[-1]] != -1:
        anc_u.append(parent[anc_u[-1]])
    pos = {v: i for i, v in enumerate(anc_u)}
    walk_w = [w]
    while walk_w[-1] not in pos:
        walk_w.append(parent[walk_w[-1]])
    lca_i = pos[walk_w[-1]]
    return anc_u[: lca_i + 1] + list(reversed(walk_w[:-1])) + [u]


def matching_decomposition(g: Graph, b: Bipartition) -> list[tuple[int, ...]]:
    """Split a regular bipartite graph into Δ edge-disjoint perfect matchings.

    Extracts one perfect matching per round by augmenting paths, scanning
    part_r vertices in ascending order, so the result is deterministic for the
    canonical edge order.  Matchings are returned as sorted tuples of edge
    indices.
    """
    if not g.is_regular:
        raise GraphError("matching_decomposition needs a regular graph")
    _check_bipartition(g, b)
    r = g.max_degree
    left = sorted(b.part_r)
    alive = [True] * g.edge_count
    matchings = []
    for _ in range(r):
        match_of = {}  # vertex -> (mate, edge index), both directions
        for u in left:
            if u not in match_of:
                _augment(g, u, alive, match_of, set())
        edges = sorted(ei for v, (_, ei) in match_of.items() if v in b.part_r)
        if len(edges) * 2 != g.vertex_count:
            raise GraphError("internal: perfect matching extraction failed")
        for ei in edges:
            alive[ei] = False
        matchings.append(tuple(edges))
    return matchings


def _augment(g, u, alive, match_of, visited):
    for w, ei in g.adjacency[u]:
        if not alive[ei] or w in visited:
            continue
        visited.add(w)
        if w not in match_of or _augment(g, match_of[w][0], alive, match_of, visited):
            match_of[w] = (u, ei)
            match_of[u] = (w, ei)
            return True
    return False


def _check_bipartition(g, b):
    if b.part_r & b.part_l:
        raise GraphError("bipartition parts overlap")
    if b.part_r | b.part_l != set(range(g.vertex_count)):
        raise GraphError("bipartition does not cover the vertex set")
    for u, v in g.edges:
        if (u in b.part_r) == (v in b.part_r):
            raise GraphError(f"edge ({u}, {v}) does not cross the bipartition")
