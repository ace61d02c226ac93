from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from tricensus.catalan import polygon_triangulation_count
from tricensus.errors import SizeCapError
from tricensus.generators import gen_convex, gen_double_circle, gen_random
from tricensus.geom import PointSet
from tricensus.triangulations import (
    Triangulation,
    brute_force_count,
    check_triangulation,
    count_full,
    count_on_subset,
    count_partial,
    enumerate_full,
    enumerate_partial,
)

HEXAGON = [(0, 0), (4, 0), (6, 3), (4, 6), (0, 6), (-2, 3)]
TRIANGLE_PLUS_ONE = [(0, 0), (6, 0), (0, 6), (1, 1)]
QUAD_PLUS_ONE = [(0, 0), (10, 0), (10, 10), (0, 10), (3, 4)]


def test_count_full_convex_hexagon():
    assert count_full(PointSet.from_coords(HEXAGON)) == 14


def test_count_full_triangle_with_interior_point():
    assert count_full(PointSet.from_coords(TRIANGLE_PLUS_ONE)) == 1


def test_count_full_quad_with_interior_point():
    # frozen from the brute-force oracle; see also the closeness tests: any
    # quadrilateral plus one interior point is quasi-convex, so the partial
    # count is exactly the convex baseline for 5 points
    ps = PointSet.from_coords(QUAD_PLUS_ONE)
    assert brute_force_count(ps) == 3
    assert count_full(ps) == 3
    assert count_partial(ps) == 5 == polygon_triangulation_count(5)


def test_count_partial_examples():
    assert count_partial(PointSet.from_coords(HEXAGON)) == 14
    assert count_partial(PointSet.from_coords(TRIANGLE_PLUS_ONE)) == 2
    assert count_partial(gen_double_circle(3)) == 14


def test_enumerate_full_examples():
    quad = PointSet.from_coords([(0, 0), (5, 1), (6, 5), (1, 6)])
    tris = enumerate_full(quad)
    assert len(tris) == 2
    assert {t.triangles for t in tris} == {
        ((0, 1, 2), (0, 2, 3)),
        ((0, 1, 3), (1, 2, 3)),
    }
    tri = PointSet.from_coords([(0, 0), (5, 0), (0, 5)])
    assert [t.triangles for t in enumerate_full(tri)] == [((0, 1, 2),)]
    pent = PointSet.from_coords([(0, 0), (6, 0), (8, 5), (3, 9), (-2, 5)])
    assert len(enumerate_full(pent)) == 5 == count_full(pent)


def test_enumerate_full_respects_cap():
    ps = gen_convex(8, 64, seed=1)
    with pytest.raises(SizeCapError):
        enumerate_full(ps, cap=7)


def test_brute_force_examples():
    assert brute_force_count(gen_convex(5, 64, seed=3)) == 5
    assert brute_force_count(PointSet.from_coords(TRIANGLE_PLUS_ONE)) == 1
    assert brute_force_count(gen_convex(7, 64, seed=3)) == 42


def test_brute_force_cap():
    ps = gen_convex(11, 64, seed=0)
    with pytest.raises(SizeCapError):
        brute_force_count(ps)


def test_count_on_subset_requires_hull():
    ps = PointSet.from_coords(QUAD_PLUS_ONE)
    with pytest.raises(ValueError):
        count_on_subset(ps, [0, 1, 2, 4])


def test_brute_force_on_explicit_subsets():
    ps = gen_random(8, 24, seed=321)
    hull = frozenset(ps.hull)
    for r in range(len(ps.interior) + 1):
        for sub in combinations(ps.interior, r):
            subset = hull | frozenset(sub)
            assert brute_force_count(ps, subset) == count_on_subset(ps, subset)


def test_counts_match_brute_force_on_random_instances():
    for k in range(60):
        n = 4 + k % 6
        ps = gen_random(n, 32, seed=4200 + k)
        assert count_full(ps) == brute_force_count(ps)


def test_convex_sets_match_polygon_counts():
    for n in range(3, 13):
        ps = gen_convex(n, 64, seed=n)
        full = count_full(ps)
        assert full == polygon_triangulation_count(n)
        assert count_partial(ps) == full


def test_partial_lower_bound_on_random_instances():
    for k in range(40):
        n = 3 + k % 7
        ps = gen_random(n, 48, seed=991 + k)
        assert count_partial(ps) >= polygon_triangulation_count(n)


def test_every_enumerated_triangulation_is_valid():
    for seed in range(8):
        ps = gen_random(7, 24, seed=77 + seed)
        tris = enumerate_full(ps)
        assert len(tris) == count_full(ps)
        assert len({t.triangles for t in tris}) == len(tris)
        for t in tris:
            check_triangulation(ps, t)


def test_double_circle_full_counts_match_brute_force():
    for m in (3, 4):
        ps = gen_double_circle(m)
        assert count_full(ps) == brute_force_count(ps)


def test_enumerate_partial_matches_count_and_subset_sum():
    for seed in range(6):
        ps = gen_random(7, 20, seed=55 + seed)
        tris = enumerate_partial(ps)
        assert len(tris) == count_partial(ps)
        hull = frozenset(ps.hull)
        by_subset = {}
        for t in tris:
            by_subset.setdefault(t.vertex_subset, []).append(t)
        for r in range(len(ps.interior) + 1):
            for sub in combinations(ps.interior, r):
                key = hull | frozenset(sub)
                assert len(by_subset.get(key, [])) == count_on_subset(ps, key)


def test_triangulation_edges_derived():
    t = Triangulation(frozenset({0, 1, 2, 3}), ((0, 1, 2), (0, 2, 3)))
    assert t.edges == frozenset({(0, 1), (0, 2), (1, 2), (2, 3), (0, 3)})


def test_check_triangulation_rejects_bad_cover():
    ps = PointSet.from_coords([(0, 0), (5, 1), (6, 5), (1, 6)])
    with pytest.raises(ValueError):
        check_triangulation(ps, Triangulation(frozenset({0, 1, 2, 3}), ((0, 1, 2),)))
    with pytest.raises(ValueError):
        check_triangulation(
            ps, Triangulation(frozenset({0, 1, 2, 3}), ((0, 1, 2), (0, 1, 3))))


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_full_count_never_below_hull_polygon_count(seed):
    ps = gen_random(7, 32, seed=seed)
    # skipping interior points can only lose triangulations relative to partial
    assert count_partial(ps) >= count_full(ps)
    assert count_partial(ps) >= polygon_triangulation_count(len(ps.points))
