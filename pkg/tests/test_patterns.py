import numpy as np
import pytest

import qmu
from qmu.coloring import EdgeColoring, validate, random_bijective_coloring
from qmu.graphs import Graph, hypercube, cycle, bipartition
from qmu.patterns import (
    PatternCertificate,
    is_path_forest,
    check_lemma3,
    pattern_masks,
    enumerate_patterns,
    verify_subset_lemma,
    cover_counterexample,
    max_pathforest_subset,
    max_pathforest,
)


def test_is_path_forest_basic(q3):
    rep = qmu.spectrum_report(q3, qmu.q3_psi())
    assert is_path_forest(rep.v_int, q3)          # a single 5-path
    assert not is_path_forest({0, 1, 2, 4}, q3)   # claw, center degree 3
    b = bipartition(q3)
    assert is_path_forest(b.part_r, q3)           # independent set
    assert not is_path_forest(range(8), q3)       # contains 4-cycles
    assert is_path_forest({0}, q3)


def test_check_lemma3_on_explicit_coloring(q3):
    assert check_lemma3(q3, qmu.q3_psi())


def test_check_lemma3_all_c4_bijections():
    g = cycle(4)
    from itertools import permutations

    for perm in permutations(range(1, 5)):
        c = validate(g, EdgeColoring(4, perm))
        assert check_lemma3(g, c)


def test_check_lemma3_preconditions():
    g = hypercube(1)
    with pytest.raises(ValueError):
        check_lemma3(g, EdgeColoring(1, (1,)))  # min degree 1
    g = cycle(4)
    with pytest.raises(ValueError):
        check_lemma3(g, validate(g, EdgeColoring(2, (1, 2, 2, 1))))  # t != |E|


def test_check_lemma3_vacuous_when_no_interval_vertex():
    # colors 1,4,2,6,3,5 around the 6-cycle: every spectrum has a gap, f=0
    g = cycle(6)
    c = validate(g, EdgeColoring(6, (1, 5, 4, 2, 6, 3)))
    assert qmu.spectrum_report(g, c).f == 0
    assert check_lemma3(g, c)


def test_claws_of_q3():
    masks = enumerate_patterns(3, "claw")
    assert len(masks) == 8  # one per center; neighbors are pairwise non-adjacent
    g = hypercube(3)
    for mask in masks:
        cert = PatternCertificate.from_mask(g, "claw", mask)
        assert cert.verify(g)


def test_chordless_six_cycles_of_q3():
    masks = enumerate_patterns(3, "cycle6")
    # exactly the complements of the four antipodal vertex pairs
    assert len(masks) == 4
    assert sorted(masks) == sorted(255 ^ (1 << v | 1 << (7 ^ v)) for v in range(4))
    g = hypercube(3)
    for mask in masks:
        assert bin(mask).count("1") == 6
        cert = PatternCertificate.from_mask(g, "cycle6", mask)
        assert cert.verify(g)


def test_q4_patterns_self_verify():
    g = hypercube(4)
    claws = enumerate_patterns(4, "claw")
    assert len(claws) == 16 * 4  # center times 3-subsets of 4 neighbors
    rings = enumerate_patterns(4, "cycle8")
    assert len(rings) == 168
    rng = np.random.default_rng(0)
    for mask in rng.choice(rings, size=20, replace=False):
        cert = PatternCertificate.from_mask(g, "cycle8", int(mask))
        assert cert.verify(g)
        assert bin(int(mask)).count("1") == 8


def test_enumerate_patterns_rejects_bad_combos():
    with pytest.raises(ValueError):
        enumerate_patterns(3, "cycle8")
    with pytest.raises(ValueError):
        enumerate_patterns(4, "cycle6")
    with pytest.raises(ValueError):
        enumerate_patterns(5, "claw")
    with pytest.raises(KeyError):
        pattern_masks(hypercube(3), "triangle")


def test_verify_subset_lemma_q3(warm):
    ok, bad = verify_subset_lemma(3)
    assert ok and bad is None
    # C(8,6) + C(8,7) + C(8,8) = 37 subsets at the critical size
    _, checked = cover_counterexample(
        hypercube(3), 6,
        enumerate_patterns(3, "claw") + enumerate_patterns(3, "cycle6"),
    )
    assert checked == 37


def test_verify_subset_lemma_q4(warm):
    ok, bad = verify_subset_lemma(4)
    assert ok and bad is None
    with pytest.raises(ValueError):
        verify_subset_lemma(5)


def test_negative_control_broken_cube(warm):
    # removing one edge from the 3-cube leaves 6 claws and 3 chordless
    # hexagons, and the checker finds an uncovered 6-subset
    g3 = hypercube(3)
    edges = [e for e in g3.edges if e != (0, 1)]
    broken = Graph(8, tuple(edges))
    claws = pattern_masks(broken, "claw")
    hexes = pattern_masks(broken, "cycle6")
    assert (len(claws), len(hexes)) == (6, 3)
    bad, _ = cover_counterexample(broken, 6, claws + hexes)
    assert bad == (0, 1, 3, 4, 6, 7)
    # sanity: that subset really has no claw center and no hexagon inside
    for center in bad:
        nbrs = [w for w, _ in broken.adjacency[center] if w in bad]
        assert len(nbrs) < 3


def test_max_pathforest_values(warm):
    assert max_pathforest_subset(3) == 5
    assert max_pathforest_subset(4) == 8
    with pytest.raises(ValueError):
        max_pathforest_subset(5)


def test_max_pathforest_witness_is_valid(warm):
    g = hypercube(4)
    size, vertices = max_pathforest(g)
    assert size == 8 == len(vertices)
    assert is_path_forest(vertices, g)


def test_max_pathforest_one_part_is_independent(warm, q3):
    # restricted sanity point: one part alone is an independent set of size 4
    b = bipartition(q3)
    assert is_path_forest(b.part_r, q3)
    assert len(b.part_r) == 4 < max_pathforest_subset(3)


def test_pathforest_scan_agrees_with_python_checker(warm):
    # kernel route vs the independent union-find route, exhaustively on the 3-cube
    g = hypercube(3)
    size, _ = max_pathforest(g)
    brute = max(
        bin(mask).count("1")
        for mask in range(1, 256)
        if is_path_forest([v for v in range(8) if mask >> v & 1], g)
    )
    assert size == brute == 5


def test_pattern_certificate_rejects_wrong_claims(q3):
    assert not PatternCertificate("claw", (0, 1, 2, 3)).verify(q3)
    assert not PatternCertificate("cycle6", (0, 1, 3, 2, 6, 4)).verify(q3)
    assert not PatternCertificate("claw", (0, 1, 1, 2)).verify(q3)
    assert not PatternCertificate("square", (0, 1, 3, 2)).verify(q3)
    # and accepts a real claw, center listed first
    assert PatternCertificate("claw", (0, 1, 2, 4)).verify(q3)


def test_backend_agreement_on_scans(warm):
    g = hypercube(4)
    masks = pattern_masks(g, "claw") + pattern_masks(g, "cycle8")
    assert cover_counterexample(g, 9, masks, backend="python") == \
        cover_counterexample(g, 9, masks, backend="numba")
    assert max_pathforest(g, backend="python") == max_pathforest(g, backend="numba")


def test_random_bijective_colorings_respect_pathforest_cap(warm, q3):
    rng = np.random.default_rng(11)
    cap = max_pathforest_subset(3)
    for _ in range(200):
        c = random_bijective_coloring(q3, rng)
        rep = qmu.spectrum_report(q3, c)
        assert rep.f <= cap
        assert check_lemma3(q3, c)
