from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tricensus.geom import (
    BOUNDARY,
    INSIDE,
    OUTSIDE,
    Point,
    PointSet,
    convex_hull,
    format_points,
    general_position_violation,
    in_convex_position,
    is_general_position,
    orient,
    parse_points_text,
    point_in_triangle,
    segments_properly_cross,
)

P = Point


def test_orient_canonical_triples():
    assert orient(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orient(P(0, 0), P(1, 0), P(2, 0)) == 0
    assert orient(P(0, 0), P(0, 1), P(1, 0)) == -1


def test_orient_rational_coordinates():
    assert orient(P(0, 0), P(1, Fraction(1, 3)), P(2, Fraction(2, 3))) == 0
    assert orient(P(0, 0), P(1, Fraction(1, 3)), P(2, Fraction(7, 10))) == 1


def test_point_in_triangle_examples():
    a, b, c = P(0, 0), P(3, 0), P(0, 3)
    assert point_in_triangle(P(1, 1), a, b, c) == INSIDE
    assert point_in_triangle(P(0, 0), a, b, c) == BOUNDARY
    assert point_in_triangle(P(5, 5), a, b, c) == OUTSIDE
    assert point_in_triangle(P(1, 0), a, b, c) == BOUNDARY  # on an edge


def test_point_in_triangle_degenerate_raises():
    with pytest.raises(ValueError):
        point_in_triangle(P(1, 1), P(0, 0), P(1, 0), P(2, 0))


def test_segments_properly_cross_examples():
    assert segments_properly_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0))
    assert not segments_properly_cross(P(0, 0), P(2, 0), P(2, 0), P(3, 1))
    assert not segments_properly_cross(P(0, 0), P(1, 0), P(0, 1), P(1, 1))
    # T-touching is not a proper crossing
    assert not segments_properly_cross(P(0, 0), P(2, 0), P(1, 0), P(1, 1))


def test_convex_hull_examples():
    square = [P(0, 0), P(4, 0), P(4, 4), P(0, 4), P(2, 2)]
    assert convex_hull(square) == [0, 1, 2, 3]
    assert convex_hull([P(0, 0), P(5, 0), P(0, 5)]) == [0, 1, 2]
    ring = [P(0, 0), P(4, -1), P(6, 2), P(3, 5), P(-1, 3)]
    assert convex_hull(ring) == [4, 0, 1, 2, 3]  # ccw from the lexicographic minimum


def test_convex_hull_starts_at_lexicographic_minimum():
    pts = [P(4, 4), P(0, 0), P(4, 0), P(0, 4)]
    hull = convex_hull(pts)
    assert hull[0] == 1
    assert set(hull) == {0, 1, 2, 3}


def test_convex_hull_collinear_raises():
    with pytest.raises(ValueError):
        convex_hull([P(0, 0), P(1, 1), P(2, 2), P(3, 3)])


def test_general_position_witnesses():
    assert general_position_violation([P(0, 0), P(1, 0), P(0, 1)]) is None
    assert general_position_violation([P(0, 0), P(1, 1), P(2, 2)]) == (0, 1, 2)
    assert general_position_violation([P(0, 0), P(0, 0), P(1, 0)]) == (0, 1)
    assert is_general_position([P(0, 0), P(1, 0), P(0, 1)])


def test_point_set_construction():
    ps = PointSet.from_coords([(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])
    assert ps.hull == (0, 1, 2, 3)
    assert ps.interior == (4,)
    assert ps.hull_sides() == ((0, 1), (1, 2), (2, 3), (3, 0))
    with pytest.raises(ValueError):
        PointSet.from_coords([(0, 0), (1, 1), (2, 2), (5, 0)])


def test_orient_table_matches_direct():
    ps = PointSet.from_coords([(0, 0), (7, 1), (5, 6), (2, 8), (3, 3)])
    for i in range(5):
        for j in range(5):
            for k in range(5):
                if len({i, j, k}) == 3:
                    assert ps.orient_idx(i, j, k) == orient(
                        ps.points[i], ps.points[j], ps.points[k])


# -- properties -------------------------------------------------------------

coords = st.fractions(min_value=-50, max_value=50, max_denominator=8)
points = st.builds(P, coords, coords)


@given(points, points, points)
def test_orient_antisymmetry_and_rotation(p, q, r):
    s = orient(p, q, r)
    assert orient(q, r, p) == s
    assert orient(r, p, q) == s
    assert orient(q, p, r) == -s
    assert orient(p, r, q) == -s


@given(points, points, points, st.fractions(min_value=Fraction(1, 4), max_value=8, max_denominator=6),
       coords, coords)
def test_orient_invariant_under_scaling_and_translation(p, q, r, scale, dx, dy):
    def move(pt):
        return P(scale * pt.x + dx, scale * pt.y + dy)

    assert orient(p, q, r) == orient(move(p), move(q), move(r))


@given(points, points, points, points)
def test_point_in_triangle_permutation_invariant(p, a, b, c):
    if orient(a, b, c) == 0:
        return
    base = point_in_triangle(p, a, b, c)
    assert point_in_triangle(p, b, c, a) == base
    assert point_in_triangle(p, c, b, a) == base
    assert point_in_triangle(p, b, a, c) == base


@given(points, points, points, points)
def test_segments_properly_cross_symmetries(a, b, c, d):
    if a == b or c == d:
        return
    base = segments_properly_cross(a, b, c, d)
    assert segments_properly_cross(c, d, a, b) == base
    assert segments_properly_cross(b, a, c, d) == base
    assert segments_properly_cross(a, b, d, c) == base


@given(st.lists(points, min_size=3, max_size=9, unique=True),
       st.randoms(use_true_random=False))
def test_convex_hull_permutation_invariant(pts, rnd):
    try:
        base = [pts[i] for i in convex_hull(pts)]
    except ValueError:
        return
    shuffled = list(pts)
    rnd.shuffle(shuffled)
    assert [shuffled[i] for i in convex_hull(shuffled)] == base


# -- text format ------------------------------------------------------------

def test_parse_points_text():
    text = "# tricensus points v1\n0 0\n4 0   # a corner\n\n1/2 9/20\n"
    pts = parse_points_text(text)
    assert pts == [P(0, 0), P(4, 0), P(Fraction(1, 2), Fraction(9, 20))]


def test_parse_rejects_missing_header_and_bad_tokens():
    with pytest.raises(ValueError):
        parse_points_text("0 0\n1 1\n")
    with pytest.raises(ValueError):
        parse_points_text("# tricensus points v1\n0.5 1\n")
    with pytest.raises(ValueError):
        parse_points_text("# tricensus points v1\n1 2 3\n")
    with pytest.raises(ValueError):
        parse_points_text("# tricensus points v1\n1/-4 0\n")


def test_format_round_trip():
    pts = [P(0, 0), P(-3, 7), P(Fraction(1, 2), Fraction(-9, 20))]
    assert parse_points_text(format_points(pts)) == pts


def test_in_convex_position():
    assert in_convex_position([P(0, 0), P(4, -1), P(6, 2), P(3, 5), P(-1, 3)])
    assert not in_convex_position([P(0, 0), P(4, 0), P(4, 4), P(0, 4), P(2, 2)])
