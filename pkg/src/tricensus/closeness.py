"""Close interior points, quasi-convexity and the quasi-convex vertex order.

An interior point is *close* to a hull side when every triangle formed by
that side and any other point of the set strictly contains it.  A set is
*quasi-convex* when every interior point is close to some side.  At most one
point can be close to a given side, which makes the quasi-convex polygon
order well defined: walk the hull counter-clockwise and insert each close
point between the endpoints of its side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geom import INSIDE, PointSet, point_in_triangle


def _side_or_raise(ps: PointSet, side) -> tuple[int, int]:
    q, r = side
    for a, b in ps.hull_sides():
        if (q, r) == (a, b) or (q, r) == (b, a):
            return (a, b)
    raise ValueError(f"({q}, {r}) is not a hull side")


def find_blocking_apex(ps: PointSet, p: int, side) -> int | None:
    """First apex whose triangle over the side misses p, or None when p is close.

    Apexes range over every point of the set except p and the side's own
    endpoints; those would give degenerate or vacuous triangles.
    """
    if p not in ps.interior:
        raise ValueError(f"point {p} is not interior")
    q, r = _side_or_raise(ps, side)
    pts = ps.points
    target = pts[p]
    for apex in range(len(pts)):
        if apex in (p, q, r):
            continue
        if point_in_triangle(target, pts[apex], pts[q], pts[r]) != INSIDE:
            return apex
    return None


def is_close(ps: PointSet, p: int, side) -> bool:
    return find_blocking_apex(ps, p, side) is None


@dataclass(frozen=True)
class ClosenessWitness:
    point: int
    side: tuple[int, int] | None
    failing_apexes: dict  # non-close side -> one apex whose triangle misses the point


@dataclass(frozen=True)
class QuasiConvexReport:
    is_quasi_convex: bool
    assignment: dict  # interior index -> hull side (ccw pair)
    polygon_order: tuple[int, ...] | None
    witnesses: dict  # interior index -> ClosenessWitness


def classify(ps: PointSet) -> QuasiConvexReport:
    """Test every interior point against every hull side and assemble the report.

    When the set is quasi-convex the report carries the quasi-convex polygon
    order; each point is assigned its first close side in hull order, which
    is collision-free because no side admits two close points.
    """
    sides = ps.hull_sides()
    assignment: dict[int, tuple[int, int]] = {}
    witnesses: dict[int, ClosenessWitness] = {}
    for p in ps.interior:
        chosen = None
        failing: dict[tuple[int, int], int] = {}
        for side in sides:
            apex = find_blocking_apex(ps, p, side)
            if apex is None:
                if chosen is None:
                    chosen = side
            else:
                failing[side] = apex
        witnesses[p] = ClosenessWitness(p, chosen, failing)
        if chosen is not None:
            assignment[p] = chosen

    by_side: dict[tuple[int, int], int] = {}
    for p, side in assignment.items():
        assert side not in by_side, f"two points close to side {side}"
        by_side[side] = p

    quasi = len(assignment) == len(ps.interior)
    order = None
    if quasi:
        seq: list[int] = []
        for side in sides:
            seq.append(side[0])
            if side in by_side:
                seq.append(by_side[side])
        order = tuple(seq)
    return QuasiConvexReport(quasi, assignment, order, witnesses)


def close_via_neighbor_triangles(ps: PointSet, p: int) -> bool:
    """Closeness test for a sole interior point via the two neighbor triangles.

    For each hull side, containment in the triangles formed with the side's
    two neighboring hull vertices decides closeness; must agree with
    :func:`classify` on single-interior-point sets.
    """
    if tuple(ps.interior) != (p,):
        raise ValueError("the set must have exactly this one interior point")
    pts = ps.points
    hull = ps.hull
    h = len(hull)
    target = pts[p]
    for j in range(h):
        a = hull[j]
        b = hull[(j + 1) % h]
        succ = hull[(j + 2) % h]
        pred = hull[(j - 1) % h]
        if (point_in_triangle(target, pts[a], pts[b], pts[succ]) == INSIDE
                and point_in_triangle(target, pts[pred], pts[a], pts[b]) == INSIDE):
            return True
    return False
