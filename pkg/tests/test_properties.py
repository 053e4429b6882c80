"""Seeded randomized invariant suites plus hypothesis checks for the pure
predicates.  The acceptance module runs the same suites at full sample count;
these stay smaller so the default test run is quick."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import qmu
from qmu.coloring import (
    chromatic_index,
    random_bijective_coloring,
    random_proper_coloring,
    reverse_colors,
    spectrum_report,
    validate,
)
from qmu.constructions import block_harmonic, is_harmonic, shift_sequence
from qmu.graphs import hypercube, cycle, complete, bipartition
from qmu.patterns import check_lemma3


SAMPLES = 150


@pytest.fixture(scope="module")
def rng():
    return np.random.default_rng(987)


def test_shift_suite_randomized_part_orders(rng):
    for i in range(SAMPLES):
        n = 3 if i % 2 == 0 else 4
        g = hypercube(n)
        b = bipartition(g)
        order = [int(v) for v in rng.permutation(sorted(b.part_r))]
        seq = shift_sequence(g, block_harmonic(g, b, part_order=order))
        assert len(seq.steps) == g.edge_count - n + 1
        for s in seq.steps:
            assert is_harmonic(g, s)
            assert b.part_r <= spectrum_report(g, s).v_int


def test_lemma3_suite_random_bijections(rng):
    for g in (hypercube(3), cycle(5), cycle(6), complete(4)):
        for _ in range(SAMPLES):
            assert check_lemma3(g, random_bijective_coloring(g, rng))


def test_reversal_suite_random_colorings(rng):
    corpus = (hypercube(3), cycle(5), cycle(6), complete(4))
    for i in range(SAMPLES):
        g = corpus[i % len(corpus)]
        t = int(rng.integers(chromatic_index(g), g.edge_count + 1))
        c = random_proper_coloring(g, t, rng)
        rev = validate(g, reverse_colors(c))
        a, b = spectrum_report(g, c), spectrum_report(g, rev)
        assert a.f == b.f
        # reflection maps intervals to intervals vertex by vertex
        assert a.v_int == b.v_int


@given(st.permutations(list(range(1, 6))))
@settings(max_examples=120, deadline=None)
def test_reversal_preserves_f_all_c5_bijections(perm):
    g = cycle(5)
    c = validate(g, qmu.EdgeColoring(5, tuple(perm)))
    assert spectrum_report(g, c).f == spectrum_report(g, reverse_colors(c)).f


@given(st.permutations(list(range(1, 5))))
@settings(max_examples=30, deadline=None)
def test_lemma3_all_c4_bijections_hypothesis(perm):
    g = cycle(4)
    c = validate(g, qmu.EdgeColoring(4, tuple(perm)))
    assert check_lemma3(g, c)


@given(st.integers(min_value=1, max_value=10))
@settings(max_examples=10)
def test_closed_form_chains(n):
    mu11, mu12, mu21, mu22 = qmu.closed_form_qn(n)
    assert mu11 <= mu12 <= mu22
    assert mu11 <= mu21 <= mu22


def test_spectrum_sizes_on_random_colorings(rng):
    g = hypercube(3)
    for _ in range(50):
        c = random_bijective_coloring(g, rng)
        rep = spectrum_report(g, c)
        assert all(len(s) == 3 for s in rep.spectra)
        assert rep.f == len(rep.v_int)
