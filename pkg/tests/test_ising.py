import pytest

from pmcubic.ising import (
    IsingError,
    coloring_from_json,
    coloring_from_matching,
    coloring_to_json,
    ising_census,
    matching_from_coloring,
    min_monochromatic,
    minimal_colorings,
    monochromatic_edges,
    root_vertex,
)
from pmcubic.maps import dual_triangulation, enumerate_rooted_cubic_maps, list_perfect_matchings


def test_two_vertex_pairs_round_trip():
    pairs = [(m, a) for m in enumerate_rooted_cubic_maps(1) for a in list_perfect_matchings(m)]
    assert len(pairs) == 6
    for m, a in pairs:
        T = dual_triangulation(m)
        c = coloring_from_matching(m, a)
        assert c[root_vertex(T)] == 1
        assert monochromatic_edges(T, c) == a
        assert matching_from_coloring(T, c) == a


def test_all_one_coloring_rejected(theta):
    T = dual_triangulation(theta)
    with pytest.raises(IsingError):
        matching_from_coloring(T, (1, 1, 1))


def test_root_must_be_colored_one(theta):
    T = dual_triangulation(theta)
    c = list(coloring_from_matching(theta, {0}))
    flipped = [3 - x for x in c]
    with pytest.raises(IsingError):
        matching_from_coloring(T, flipped)


def test_dumbbell_coloring(dumbbell):
    c = coloring_from_matching(dumbbell, {0})
    assert len(monochromatic_edges(dual_triangulation(dumbbell), c)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exhaustive_correspondence(n):
    for m in enumerate_rooted_cubic_maps(n):
        T = dual_triangulation(m)
        ms = set(list_perfect_matchings(m))
        cs = minimal_colorings(T)
        assert {matching_from_coloring(T, c) for c in cs} == ms
        assert len(cs) == len(ms)
        for a in ms:
            assert matching_from_coloring(T, coloring_from_matching(m, a)) == a


@pytest.mark.parametrize("n", [1, 2])
def test_minimality(n):
    for m in enumerate_rooted_cubic_maps(n):
        assert min_monochromatic(dual_triangulation(m)) >= n


def test_census():
    assert [ising_census(n) for n in (1, 2, 3)] == [6, 54, 648]
    with pytest.raises(IsingError):
        ising_census(4)


def test_json():
    assert coloring_from_json(coloring_to_json((1, 2, 2))) == (1, 2, 2)
    with pytest.raises(IsingError):
        coloring_from_json("[1, 3]")
