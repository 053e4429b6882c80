import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import qmu
from qmu.coloring import (
    EdgeColoring,
    AdjacentSameColorError,
    UnusedColorError,
    ColorRangeError,
    ColoringError,
    SearchCapError,
    validate,
    spectrum,
    is_interval,
    spectrum_report,
    reverse_colors,
    chromatic_index,
    random_bijective_coloring,
    random_proper_coloring,
)
from qmu.graphs import hypercube, path, cycle, complete, bipartition


def test_validate_accepts_explicit_q3_colorings(q3):
    assert validate(q3, qmu.q3_phi()).t == 4
    assert validate(q3, qmu.q3_psi()).t == 12


def test_validate_single_edge():
    g = path(2)
    c = validate(g, EdgeColoring(1, (1,)))
    assert spectrum_report(g, c).f == 2


def test_validate_reports_adjacent_same_color():
    g = cycle(4)  # canonical edges (0,1),(0,2),(1,3),(2,3)
    with pytest.raises(AdjacentSameColorError) as exc:
        validate(g, EdgeColoring(2, (1, 2, 1, 2)))
    assert exc.value.vertex in (1, 2)
    assert exc.value.color in (1, 2)


def test_validate_reports_unused_color():
    g = path(3)
    with pytest.raises(UnusedColorError) as exc:
        validate(g, EdgeColoring(3, (1, 2)))
    assert exc.value.color == 3


def test_validate_reports_out_of_range():
    g = path(3)
    with pytest.raises(ColorRangeError):
        validate(g, EdgeColoring(2, (1, 3)))
    with pytest.raises(ColorRangeError):
        validate(g, EdgeColoring(2, (0, 1)))
    with pytest.raises(ColoringError):
        validate(g, EdgeColoring(2, (1,)))  # wrong length


def test_spectrum_values(q3):
    psi = qmu.q3_psi()
    assert spectrum(q3, psi, 4) == (1, 2, 3)   # interval corner
    assert spectrum(q3, psi, 0) == (1, 6, 11)  # spread corner
    with pytest.raises(ColoringError):
        spectrum(q3, psi, 9)


def test_spectrum_sizes_match_degrees(q3):
    for c in (qmu.q3_phi(), qmu.q3_psi()):
        for x in range(8):
            assert len(spectrum(q3, c, x)) == q3.degree(x)


def test_delta_coloring_spectrum_is_full_range(q3):
    b = bipartition(q3)
    c = qmu.interval_on_part(q3, b, 3)
    for x in range(8):
        assert spectrum(q3, c, x) == (1, 2, 3)
    assert spectrum_report(q3, c).f == 8


def test_is_interval():
    assert is_interval({3, 4, 5})
    assert not is_interval({1, 6, 11})
    assert is_interval({7})
    assert is_interval((2, 3))
    with pytest.raises(ColoringError):
        is_interval(())


@given(st.sets(st.integers(min_value=1, max_value=30), min_size=1, max_size=10))
@settings(max_examples=200)
def test_is_interval_matches_definition(s):
    want = sorted(s) == list(range(min(s), max(s) + 1))
    assert is_interval(s) == want


def test_spectrum_report_phi_psi(q3):
    assert spectrum_report(q3, qmu.q3_phi()).f == 0
    rep = spectrum_report(q3, qmu.q3_psi())
    assert rep.f == 5
    assert rep.v_int == frozenset({1, 2, 3, 4, 6})


def test_reverse_colors_preserves_f(q3):
    psi = qmu.q3_psi()
    rev = validate(q3, reverse_colors(psi))
    assert spectrum_report(q3, rev).f == 5
    assert reverse_colors(rev) == psi


def test_general_permutation_can_change_f(q3):
    # renaming colors is NOT an f-symmetry: swapping colors 2 and 11 in the
    # bijective 12-coloring moves the interval set around and shrinks it
    psi = qmu.q3_psi()
    swap = {2: 11, 11: 2}
    permuted = validate(
        q3, EdgeColoring(12, tuple(swap.get(c, c) for c in psi.color_of))
    )
    assert spectrum_report(q3, permuted).f == 4


@pytest.mark.parametrize("make,want", [
    (lambda: hypercube(1), 1),
    (lambda: hypercube(3), 3),
    (lambda: hypercube(5), 5),
    (lambda: path(4), 2),
    (lambda: cycle(4), 2),
    (lambda: cycle(5), 3),
    (lambda: complete(3), 3),
    (lambda: complete(4), 3),
])
def test_chromatic_index(make, want):
    assert chromatic_index(make()) == want


def test_chromatic_index_cap():
    with pytest.raises(SearchCapError):
        chromatic_index(complete(8))  # 28 edges, not bipartite
    # bipartite graphs are exempt from the cap
    assert chromatic_index(hypercube(6)) == 6


def test_random_bijective_coloring_is_valid():
    rng = np.random.default_rng(5)
    g = cycle(5)
    c = random_bijective_coloring(g, rng)
    assert c.t == 5 and sorted(c.color_of) == [1, 2, 3, 4, 5]


def test_random_proper_coloring_all_palettes():
    rng = np.random.default_rng(5)
    g = complete(4)
    for t in range(3, 7):
        c = random_proper_coloring(g, t, rng)
        assert c.t == t
        assert len(set(c.color_of)) == t
    with pytest.raises(ColoringError):
        random_proper_coloring(g, 99, rng)


def test_color_class_accessor(q3):
    psi = qmu.q3_psi()
    assert psi.color_class(1) == (q3.edge_index(0, 4),)
    assert psi.color_class(13) == ()


def test_coloring_json_roundtrip():
    psi = qmu.q3_psi()
    again = EdgeColoring.from_json_obj(psi.to_json_obj())
    assert again == psi
