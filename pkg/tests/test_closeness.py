from fractions import Fraction

import pytest

from tricensus.catalan import polygon_triangulation_count
from tricensus.closeness import (
    classify,
    close_via_neighbor_triangles,
    find_blocking_apex,
    is_close,
)
from tricensus.generators import gen_convex, gen_double_circle, gen_random
from tricensus.geom import Point, PointSet
from tricensus.triangulations import count_partial

SQUARE_PLUS_LOW = [(0, 0), (1, 0), (1, 1), (0, 1), (Fraction(1, 2), Fraction(9, 20))]
PENTAGON_PLUS_CENTER = [(0, -10), (10, -3), (6, 9), (-6, 9), (-10, -3), (0, 0)]


def test_triangle_interior_point_is_close_to_every_side():
    ps = PointSet.from_coords([(0, 0), (6, 0), (0, 6), (2, 2)])
    for side in ps.hull_sides():
        assert is_close(ps, 3, side)


def test_square_point_close_to_bottom_not_top():
    ps = PointSet.from_coords(SQUARE_PLUS_LOW)
    assert is_close(ps, 4, (0, 1))
    assert not is_close(ps, 4, (2, 3))
    assert find_blocking_apex(ps, 4, (2, 3)) == 0
    # sides may be given in either orientation
    assert is_close(ps, 4, (1, 0))


def test_is_close_validates_arguments():
    ps = PointSet.from_coords(SQUARE_PLUS_LOW)
    with pytest.raises(ValueError):
        is_close(ps, 0, (0, 1))  # not interior
    with pytest.raises(ValueError):
        is_close(ps, 4, (0, 2))  # not a hull side


def test_classify_convex_polygon():
    rep = classify(gen_convex(6, 64, seed=9))
    assert rep.is_quasi_convex
    assert rep.assignment == {}
    assert rep.polygon_order is not None and len(rep.polygon_order) == 6


def test_classify_double_circle():
    ps = gen_double_circle(3)
    rep = classify(ps)
    assert rep.is_quasi_convex
    assert set(rep.assignment) == set(ps.interior)
    # each hull side carries exactly one close point
    assert sorted(rep.assignment.values()) == sorted(ps.hull_sides())
    # the polygon order alternates hull and interior points
    order = rep.polygon_order
    assert len(order) == 6
    hull = set(ps.hull)
    for i, v in enumerate(order):
        assert (v in hull) == (i % 2 == 0)


def test_classify_pentagon_with_center_is_not_quasi_convex():
    ps = PointSet.from_coords(PENTAGON_PLUS_CENTER)
    rep = classify(ps)
    assert not rep.is_quasi_convex
    assert rep.polygon_order is None
    witness = rep.witnesses[5]
    assert witness.side is None
    assert set(witness.failing_apexes) == set(ps.hull_sides())
    for side, apex in witness.failing_apexes.items():
        assert not is_close(ps, 5, side)
        assert apex not in (5, *side)


def test_equality_iff_quasi_convex_on_small_corpus():
    for k in range(30):
        n = 4 + k % 6
        ps = gen_random(n, 48, seed=3100 + k)
        rep = classify(ps)
        equal = count_partial(ps) == polygon_triangulation_count(len(ps.points))
        assert equal == rep.is_quasi_convex


def test_at_most_one_close_point_per_side():
    for k in range(25):
        ps = gen_random(4 + k % 6, 32, seed=880 + k)
        seen = {}
        for p in ps.interior:
            for side in ps.hull_sides():
                if is_close(ps, p, side):
                    assert side not in seen, (side, seen[side], p)
                    seen[side] = p


def test_close_via_neighbor_triangles_examples():
    assert close_via_neighbor_triangles(PointSet.from_coords(SQUARE_PLUS_LOW), 4)
    assert not close_via_neighbor_triangles(PointSet.from_coords(PENTAGON_PLUS_CENTER), 5)
    assert close_via_neighbor_triangles(
        PointSet.from_coords([(0, 0), (9, 1), (2, 7), (3, 2)]), 3)


def test_close_via_neighbor_triangles_requires_single_interior():
    ps = PointSet.from_coords([(0, 0), (12, 0), (12, 12), (0, 12), (5, 2), (6, 10)])
    with pytest.raises(ValueError):
        close_via_neighbor_triangles(ps, 4)


def test_neighbor_triangle_rule_agrees_with_classify():
    for k in range(40):
        ps = gen_random(4 + k % 5, 64, seed=7600 + k)
        if len(ps.interior) != 1:
            continue
        p = ps.interior[0]
        rep = classify(ps)
        assert close_via_neighbor_triangles(ps, p) == (p in rep.assignment)


def test_classify_invariant_under_positive_affine_maps():
    ps = gen_double_circle(3)
    rep = classify(ps)

    def apply(pt: Point) -> Point:
        # det = 2*3 - 1*1 = 5 > 0
        return Point(2 * pt.x + 1 * pt.y + 7, 1 * pt.x + 3 * pt.y - 4)

    mapped = PointSet.from_points([apply(p) for p in ps.points])
    rep2 = classify(mapped)
    assert rep2.is_quasi_convex == rep.is_quasi_convex
    assert rep2.assignment == rep.assignment

    def rotations(seq):
        return [seq[i:] + seq[:i] for i in range(len(seq))]

    assert tuple(rep2.polygon_order) in rotations(tuple(rep.polygon_order))
