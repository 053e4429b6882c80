"""Structural verification at exhaustive scale: path-forest structure of the
interval-vertex set under bijective colorings, and the claw/chordless-cycle
patterns every large cube subset must contain."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graphs import Graph, hypercube, induced_subgraph
from .coloring import EdgeColoring, validate, spectrum_report
from . import backend as _backend

__all__ = [
    "PatternCertificate",
    "is_path_forest",
    "check_lemma3",
    "pattern_masks",
    "enumerate_patterns",
    "verify_subset_lemma",
    "cover_counterexample",
    "max_pathforest_subset",
    "max_pathforest",
]

_PATTERN_SIZES = {"claw": 4, "cycle6": 6, "cycle8": 8}


def is_path_forest(vertices, g: Graph) -> bool:
    """True iff the induced structure on `vertices` is a disjoint union of
    simple paths: every induced degree <= 2 and no cycle."""
    sub = induced_subgraph(g, vertices)
    if any(d > 2 for d in sub.degrees.values()):
        return False
    # acyclic via union-find over induced edges
    parent = {v: v for v in sub.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in sub.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def check_lemma3(g: Graph, c: EdgeColoring) -> bool:
    """With minimum degree >= 2 and a bijective coloring (t = |E|), the
    interval-spectrum vertices always induce a path forest; this evaluates
    that claim for one coloring (vacuously true when the set is empty)."""
    if g.min_degree < 2:
        raise ValueError(f"needs minimum degree >= 2, got {g.min_degree}")
    validate(g, c)
    if c.t != g.edge_count:
        raise ValueError(f"needs a bijective coloring, got t={c.t} != {g.edge_count}")
    rep = spectrum_report(g, c)
    if not rep.v_int:
        return True
    return is_path_forest(rep.v_int, g)


def _matches_pattern(g: Graph, combo, kind: str) -> bool:
    sub = induced_subgraph(g, combo)
    degs = sorted(sub.degrees.values())
    if kind == "claw":
        return degs == [1, 1, 1, 3]
    # chordless cycle: every induced degree exactly 2 and a single component
    size = len(combo)
    if degs != [2] * size or len(sub.edges) != size:
        return False
    adj = {v: [] for v in combo}
    for u, v in sub.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {combo[0]}
    stack = [combo[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == size


def pattern_masks(g: Graph, kind: str) -> list[int]:
    """All vertex subsets of g inducing the pattern, as bitmasks; exhaustive
    scan over subsets of the pattern size, self-verifying by definition."""
    size = _PATTERN_SIZES[kind]
    masks = []
    for combo in combinations(range(g.vertex_count), size):
        if _matches_pattern(g, combo, kind):
            masks.append(sum(1 << v for v in combo))
    return masks


def enumerate_patterns(n: int, kind: str) -> list[int]:
    """Pattern bitmasks over the n-cube: claws for n in {3, 4}, chordless
    6-cycles for n = 3, chordless 8-cycles for n = 4."""
    if n not in (3, 4):
        raise ValueError("supported cubes: n in {3, 4}")
    if kind not in _PATTERN_SIZES:
        raise ValueError(f"unknown pattern kind {kind!r}")
    if kind == "cycle6" and n != 3:
        raise ValueError("cycle6 patterns only apply to the 3-cube")
    if kind == "cycle8" and n < 4:
        raise ValueError("cycle8 patterns need n >= 4")
    return pattern_masks(hypercube(n), kind)


def _required_patterns(n: int) -> list[int]:
    kinds = ("claw", "cycle6") if n == 3 else ("claw", "cycle8")
    masks = []
    for kind in kinds:
        masks.extend(enumerate_patterns(n, kind))
    return masks


def cover_counterexample(
    g: Graph, threshold: int, masks, backend: str | None = None
) -> tuple[tuple[int, ...] | None, int]:
    """First vertex subset of size >= threshold containing none of the given
    pattern masks (None when all are covered), plus the number of subsets
    checked."""
    if g.vertex_count > 24:
        raise ValueError("subset scan capped at 24 vertices")
    kern = _backend.kernel("cover_scan", backend)
    arr = np.array(sorted(masks), dtype=np.int64)
    bad, checked = kern(arr, g.vertex_count, threshold)
    if bad == -1:
        return None, int(checked)
    vertices = tuple(v for v in range(g.vertex_count) if (int(bad) >> v) & 1)
    return vertices, int(checked)


def verify_subset_lemma(
    n: int, backend: str | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """Exhaustively confirm that every cube subset at the critical size
    contains a claw or the chordless cycle for that dimension: size >= 6 on
    the 3-cube, size >= 2^(n-1)+1 = 9 on the 4-cube.  Returns (ok,
    counterexample vertices or None)."""
    if n not in (3, 4):
        raise ValueError("supported cubes: n in {3, 4}")
    threshold = 6 if n == 3 else 2 ** (n - 1) + 1
    bad, _ = cover_counterexample(hypercube(n), threshold, _required_patterns(n), backend)
    return bad is None, bad


def max_pathforest(g: Graph, backend: str | None = None) -> tuple[int, tuple[int, ...]]:
    """Largest vertex subset inducing a path forest, with one witness subset,
    by exhaustive scan over all 2^|V| subsets."""
    if g.vertex_count > 24:
        raise ValueError("subset scan capped at 24 vertices")
    adjmask = np.zeros(g.vertex_count, dtype=np.int64)
    for u, v in g.edges:
        adjmask[u] |= 1 << v
        adjmask[v] |= 1 << u
    kern = _backend.kernel("max_pathforest_scan", backend)
    best, mask = kern(adjmask, g.vertex_count)
    vertices = tuple(v for v in range(g.vertex_count) if (int(mask) >> v) & 1)
    return int(best), vertices


def max_pathforest_subset(n: int, backend: str | None = None) -> int:
    """Maximum size of an induced path forest in the n-cube (n in {3, 4});
    caps the interval-vertex count of any bijective coloring."""
    if n not in (3, 4):
        raise ValueError("supported cubes: n in {3, 4}")
    size, _ = max_pathforest(hypercube(n), backend)
    return size


@dataclass(frozen=True)
class PatternCertificate:
    """An ordered vertex list claimed to induce a named pattern: a claw
    (center first), or a chordless cycle in cyclic order."""

    kind: str
    vertices: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        if self.kind not in _PATTERN_SIZES:
            return False
        if len(self.vertices) != _PATTERN_SIZES[self.kind]:
            return False
        if len(set(self.vertices)) != len(self.vertices):
            return False
        sub = induced_subgraph(g, self.vertices)
        if self.kind == "claw":
            center = self.vertices[0]
            want = {tuple(sorted((center, leaf))) for leaf in self.vertices[1:]}
            return set(sub.edges) == want
        ring = self.vertices
        want = {
            tuple(sorted((ring[i], ring[(i + 1) % len(ring)])))
            for i in range(len(ring))
        }
        return set(sub.edges) == want

    @classmethod
    def from_mask(cls, g: Graph, kind: str, mask: int) -> "PatternCertificate":
        vertices = [v for v in range(g.vertex_count) if (mask >> v) & 1]
        if kind == "claw":
            sub = induced_subgraph(g, vertices)
            center = next(v for v, d in sub.degrees.items() if d == 3)
            leaves = sorted(v for v in vertices if v != center)
            return cls(kind, (center, *leaves))
        sub = induced_subgraph(g, vertices)
        adj = {v: [] for v in vertices}
        for u, v in sub.edges:
            adj[u].append(v)
            adj[v].append(u)
        start = min(vertices)
        ring = [start, min(adj[start])]
        while len(ring) < len(vertices):
            nxt = [w for w in adj[ring[-1]] if w != ring[-2]]
            ring.append(nxt[0])
        return cls(kind, tuple(ring))
