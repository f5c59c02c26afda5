import json

import pytest

from pmcubic.map_series import CountKind, closed_form_count
from pmcubic.maps import (
    ALL,
    BRIDGELESS,
    HAS_BRIDGE,
    THREE_CONNECTED,
    RootedMap,
    UsageError,
    bridges,
    classify_connectivity,
    dual_triangulation,
    dump_maps,
    enumerate_four_regular_maps,
    enumerate_rooted_cubic_maps,
    enumerate_rooted_maps,
    list_perfect_matchings,
    matched_census,
    matched_census_all,
)


def test_small_maps_are_planar(theta, dumbbell, k4):
    for m in (theta, dumbbell, k4):
        assert m.is_connected() and m.is_planar()
    assert len(k4.vertices()) == 4 and len(k4.faces()) == 4


def test_rejects_bad_permutations():
    with pytest.raises(ValueError):
        RootedMap((0, 0))
    with pytest.raises(ValueError):
        RootedMap((0, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cubic_counts_match_formula(n):
    maps = list(enumerate_rooted_cubic_maps(n))
    assert len(maps) == closed_form_count(CountKind.CUBIC, n)
    assert len(set(maps)) == len(maps)
    for m in maps:
        assert m == m.canonical()
        assert m.is_planar()
        assert all(d == 3 for d in m.degrees())


def test_rerooting_gives_the_same_unrooted_map(k4):
    # every rerooting of a canonical map canonicalises to some enumerated map
    maps = set(enumerate_rooted_cubic_maps(2))
    for d in range(k4.num_darts):
        assert k4.rerooted(d).canonical() in maps


@pytest.mark.parametrize("n", [1, 2, 3])
def test_general_and_four_regular_counts(n):
    r = closed_form_count(CountKind.ROOTED_PLANAR_R, n)
    assert sum(1 for _ in enumerate_rooted_maps(n)) == r
    assert sum(1 for _ in enumerate_four_regular_maps(n)) == r


def test_bridgeless_general_maps():
    for n in (1, 2, 3):
        got = sum(1 for m in enumerate_rooted_maps(n) if not bridges(m))
        assert got == closed_form_count(CountKind.LOOPLESS_L, n)


def test_matchings_of_small_maps(theta, dumbbell, k4):
    assert len(list_perfect_matchings(theta)) == 3
    assert list_perfect_matchings(dumbbell) == [frozenset({0})]
    assert len(list_perfect_matchings(k4)) == 3


def test_matchings_need_cubic_input():
    with pytest.raises(UsageError):
        list_perfect_matchings(RootedMap.from_cycles([(0, 1)]))


def test_connectivity_classes(theta, dumbbell, k4):
    assert classify_connectivity(dumbbell) == HAS_BRIDGE
    assert classify_connectivity(theta) == BRIDGELESS
    assert classify_connectivity(k4) == THREE_CONNECTED


def test_matched_pairs_small():
    assert sum(len(list_perfect_matchings(m)) for m in enumerate_rooted_cubic_maps(1)) == 6
    assert sum(len(list_perfect_matchings(m)) for m in enumerate_rooted_cubic_maps(2)) == 54


def test_root_classes_against_series():
    # root edge a loop / an isthmus, with the matching count as weight
    expected = {1: (2, 1), 2: (8, 8), 3: (72, 88)}
    for n, (loops, isthmuses) in expected.items():
        lo = br = 0
        for m in enumerate_rooted_cubic_maps(n):
            k = len(list_perfect_matchings(m))
            owner = m.vertex_of()
            e = m.root // 2
            if owner[2 * e] == owner[2 * e + 1]:
                lo += k
            elif e in bridges(m):
                br += k
        assert (lo, br) == (loops, isthmuses)


def test_dual(theta, dumbbell):
    t = dual_triangulation(theta)
    assert len(t.vertices()) == len(theta.faces()) == 3
    assert len(t.faces()) == 2
    assert all(len(f) == 3 for f in t.faces())
    owner = dual_triangulation(dumbbell).vertex_of()
    assert any(owner[2 * e] == owner[2 * e + 1] for e in range(3))  # bridge -> loop
    for n in (1, 2):
        for m in enumerate_rooted_cubic_maps(n):
            assert dual_triangulation(dual_triangulation(m)).canonical() == m


def test_census_examples():
    assert matched_census(2, BRIDGELESS) == 18
    assert matched_census(3, THREE_CONNECTED) == 12
    assert matched_census(1, ALL) == 6
    with pytest.raises(UsageError):
        matched_census(5)
    with pytest.raises(UsageError):
        matched_census(2, "weird")


def test_parallel_census_agrees():
    assert matched_census_all(3, workers=2) == matched_census_all(3)


@pytest.mark.slow
def test_census_n4():
    assert matched_census_all(4) == {ALL: 9072, BRIDGELESS: 1632, THREE_CONNECTED: 69}


def test_json_round_trip(k4, tmp_path):
    data = k4.to_json(matching=[0, 3])
    assert RootedMap.from_json(json.dumps(data)) == k4
    assert data["matching"] == [0, 3]
    path = tmp_path / "maps.jsonl"
    assert dump_maps(path, enumerate_rooted_cubic_maps(1), with_matchings=True) == 6
    lines = path.read_text().splitlines()
    assert all("matching" in json.loads(line) for line in lines)
