"""Characteristic vectors of polylines in an angle and of polygons around a point.

Two related encodings live here, both decided purely by orientation signs.

*Angle frames.*  Fix an apex and two arm points spanning an angle smaller
than a half-turn, with interior points sorted left to right by the angle
from the left arm.  A polyline is any increasing subset of the interior
points, walked from the left arm to the right arm.  Its characteristic
vector records, per interior point, whether the polyline passes above it:
for a non-vertex, above means the segment from the apex to the point crosses
the polyline chord bracketing it; for a vertex of the polyline the rule
flips.  The two maps are mutually inverse bijections between polylines and
bit vectors; ``polyline_from_charvec`` recovers the unique vertex chain for
a vector by an exact search over consecutive vertex pairs, since a point's
bit depends only on its two bracketing chain nodes.

*Radial frames.*  Fix a center and points sorted counter-clockwise from a
deterministic reference direction parallel to no center-to-point ray.  A
*good* polygon is a vertex subset whose consecutive counter-clockwise
angular gaps at the center are all less than a half-turn.  The bit of a
non-vertex point is 1 when the center lies strictly inside the convex cone
spanned at the point by the rays to its bracketing polygon vertices (the
angle containing the center is less than a half-turn); for polygon vertices
the rule flips.  The polygon-to-vector map is injective, and its image is
invariant under moving any point along its ray from the center.

``project_to_convex_position`` implements the outward projection used to
compare a point set against a convex configuration: every interior point
except a chosen pivot is pushed along the ray from the pivot to just beyond
the hull, then the placement is verified (convex position plus general
position) and retried with smaller overshoots until it passes.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import chain, combinations

from .errors import ConstructionError, SizeCapError
from .geom import (
    Point,
    PointSet,
    general_position_violation,
    orient,
    segments_properly_cross,
)

GOOD_POLYGON_CAP = 10


# ---------------------------------------------------------------------------
# Angle frames and polylines
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AngleFrame:
    """An angle with its interior points sorted left to right.

    ``turn`` is the orientation sign of (apex, left_arm, right_arm); it is
    carried so that frames of either handedness work.
    """

    apex: Point
    left_arm: Point
    right_arm: Point
    interior: tuple[Point, ...]
    turn: int
    _cache: dict = field(default_factory=dict, init=False, compare=False, repr=False)

    def node(self, e: int) -> Point:
        """Chain node by id: -1 is the left arm, n is the right arm."""
        if e == -1:
            return self.left_arm
        if e == len(self.interior):
            return self.right_arm
        return self.interior[e]

    def crossing_table(self) -> list:
        """crossings[i][u+1][v+1]: does apex--P_i cross the chord node(u)--node(v)."""
        table = self._cache.get("crossings")
        if table is None:
            n = len(self.interior)
            table = [[[False] * (n + 2) for _ in range(n + 2)] for _ in range(n)]
            for i in range(n):
                for u in range(-1, n + 1):
                    for v in range(u + 1, n + 1):
                        if i in (u, v):
                            continue
                        hit = segments_properly_cross(
                            self.apex, self.interior[i], self.node(u), self.node(v))
                        table[i][u + 1][v + 1] = hit
                        table[i][v + 1][u + 1] = hit
            self._cache["crossings"] = table
        return table


def build_angle_frame(apex: Point, left_arm: Point, right_arm: Point, pts) -> AngleFrame:
    """Validate the configuration and sort the interior points angularly."""
    pts = list(pts)
    witness = general_position_violation([apex, left_arm, right_arm, *pts])
    if witness is not None:
        raise ValueError(f"frame points not in general position: indices {witness}")
    s = orient(apex, left_arm, right_arm)
    for p in pts:
        if orient(apex, left_arm, p) != s or orient(apex, right_arm, p) != -s:
            raise ValueError(f"{p} is not strictly inside the angle")
    # X comes before Y when the angle from the left arm at the apex is smaller
    ordered = sorted(pts, key=_angular_key(apex, s))
    return AngleFrame(apex, left_arm, right_arm, tuple(ordered), s)


def _angular_key(apex: Point, s: int):
    def cmp(u: Point, v: Point) -> int:
        return -s * orient(apex, u, v)

    return cmp_to_key(cmp)


def all_polylines(frame: AngleFrame):
    """Every polyline of the frame: all increasing subsets of interior indices."""
    n = len(frame.interior)
    return chain.from_iterable(combinations(range(n), m) for m in range(n + 1))


def _validate_polyline(frame: AngleFrame, polyline) -> tuple[int, ...]:
    verts = tuple(polyline)
    n = len(frame.interior)
    if any(not 0 <= v < n for v in verts) or list(verts) != sorted(set(verts)):
        raise ValueError(f"invalid polyline {verts} for a frame of {n} points")
    return verts


def polyline_charvec(frame: AngleFrame, polyline) -> tuple[int, ...]:
    """Characteristic vector of a polyline, one bit per interior point."""
    verts = _validate_polyline(frame, polyline)
    n = len(frame.interior)
    crossings = frame.crossing_table()
    sentinel_chain = (-1,) + verts + (n,)
    positions = {v: m for m, v in enumerate(verts, start=1)}
    bits = []
    for k in range(n):
        pos = positions.get(k)
        if pos is not None:
            left, right = sentinel_chain[pos - 1], sentinel_chain[pos + 1]
            bits.append(0 if crossings[k][left + 1][right + 1] else 1)
        else:
            pos = bisect_left(sentinel_chain, k)
            left, right = sentinel_chain[pos - 1], sentinel_chain[pos]
            bits.append(1 if crossings[k][left + 1][right + 1] else 0)
    return tuple(bits)


def polyline_from_charvec(frame: AngleFrame, bits) -> tuple[int, ...]:
    """The unique polyline whose characteristic vector equals ``bits``.

    A point's bit is determined by its two bracketing chain nodes alone, so
    the polyline is recovered by an exact search over consecutive vertex
    pairs: extend the chain node by node, requiring every skipped point to
    match its prescribed bit against the chord just drawn and every settled
    vertex to match its flipped bit against its two neighbors.  The search
    is memoized on (previous, current) node pairs; by the bijection there is
    exactly one chain to find.
    """
    bits = tuple(bits)
    n = len(frame.interior)
    if len(bits) != n or any(b not in (0, 1) for b in bits):
        raise ValueError(f"need a 0/1 vector of length {n}")
    crossings = frame.crossing_table()

    def gap_ok(u: int, v: int) -> bool:
        row = range(u + 1, v)
        return all((1 if crossings[j][u + 1][v + 1] else 0) == bits[j] for j in row)

    memo: dict[tuple[int, int], tuple[int, ...] | None] = {}

    def extend(prev: int, cur: int) -> tuple[int, ...] | None:
        # suffix of internal vertices after cur, or None if infeasible
        if cur == n:
            return ()
        key = (prev, cur)
        if key in memo:
            return memo[key]
        result = None
        for nxt in range(cur + 1, n + 1):
            if not gap_ok(cur, nxt):
                continue
            if cur >= 0 and (0 if crossings[cur][prev + 1][nxt + 1] else 1) != bits[cur]:
                continue
            tail = extend(cur, nxt)
            if tail is not None:
                result = ((nxt,) + tail) if nxt < n else tail
                break
        memo[key] = result
        return result

    chain_suffix = extend(-1, -1)
    if chain_suffix is None:
        raise AssertionError(f"no polyline realizes {bits}; the bijection is broken")
    return chain_suffix


def frame_bijection_holds(frame: AngleFrame) -> bool:
    """Exhaustively check that polylines and bit vectors are in bijection."""
    n = len(frame.interior)
    seen = set()
    for polyline in all_polylines(frame):
        vec = polyline_charvec(frame, polyline)
        if vec in seen:
            return False
        seen.add(vec)
        if polyline_from_charvec(frame, vec) != polyline:
            return False
    return len(seen) == 2 ** n


# ---------------------------------------------------------------------------
# Radial frames and good polygons
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RadialFrame:
    """A center with its surrounding points sorted counter-clockwise.

    The order starts at ``reference``, the first direction from the fixed
    sequence (0,-1), (1,0), (1,-1), (1,-2), ... that is parallel to no
    center-to-point ray.
    """

    center: Point
    points: tuple[Point, ...]
    reference: tuple[int, int]


def _reference_direction(center: Point, pts) -> tuple[int, int]:
    def parallel(d, p):
        return d[0] * (p.y - center.y) - d[1] * (p.x - center.x) == 0

    k = 0
    while True:
        d = (0, -1) if k == 0 else (1, -(k - 1))
        if not any(parallel(d, p) for p in pts):
            return d
        k += 1


def build_radial_frame(center: Point, pts) -> RadialFrame:
    pts = list(pts)
    witness = general_position_violation([center, *pts])
    if witness is not None:
        raise ValueError(f"frame points not in general position: indices {witness}")
    ref = _reference_direction(center, pts)

    def half(p: Point) -> int:
        # 0 when the ccw angle from the reference direction is below a half-turn
        return 0 if ref[0] * (p.y - center.y) - ref[1] * (p.x - center.x) > 0 else 1

    def cmp(p1: Point, p2: Point) -> int:
        h1, h2 = half(p1), half(p2)
        if h1 != h2:
            return h1 - h2
        return -orient(center, p1, p2)

    return RadialFrame(center, tuple(sorted(pts, key=cmp_to_key(cmp))), ref)


def is_good_polygon(frame: RadialFrame, vertices) -> bool:
    """Good means every consecutive ccw angular gap at the center is < half-turn."""
    verts = tuple(vertices)
    n = len(frame.points)
    if len(verts) < 3 or list(verts) != sorted(set(verts)):
        return False
    if any(not 0 <= v < n for v in verts):
        return False
    c = frame.center
    for m in range(len(verts)):
        u = frame.points[verts[m]]
        v = frame.points[verts[(m + 1) % len(verts)]]
        if orient(c, u, v) != 1:
            return False
    return True


def enumerate_good_polygons(frame: RadialFrame, cap: int = GOOD_POLYGON_CAP) -> list[tuple[int, ...]]:
    n = len(frame.points)
    if n > cap:
        raise SizeCapError(f"good-polygon enumeration refused for {n} points (cap {cap})")
    out = []
    for m in range(3, n + 1):
        for verts in combinations(range(n), m):
            if is_good_polygon(frame, verts):
                out.append(verts)
    return out


def _center_in_cone(frame: RadialFrame, at: int, left: int, right: int) -> bool:
    p = frame.points[at]
    u = frame.points[left]
    v = frame.points[right]
    c = orient(p, u, v)
    return orient(p, u, frame.center) == c and orient(p, frame.center, v) == c


def polygon_charvec(frame: RadialFrame, vertices) -> tuple[int, ...]:
    """Characteristic vector of a good polygon, one bit per frame point.

    The angle at a point between the rays to its bracketing polygon vertices
    that contains the center is smaller than a half-turn exactly when the
    center lies strictly inside the convex cone spanned by those rays; that
    is the non-vertex "passes above" test, flipped for polygon vertices.
    """
    verts = tuple(vertices)
    if not is_good_polygon(frame, verts):
        raise ValueError(f"{verts} is not a good polygon for this frame")
    n = len(frame.points)
    vset = set(verts)
    m = len(verts)
    bits = []
    for i in range(n):
        if i in vset:
            pos = verts.index(i)
            left, right = verts[pos - 1], verts[(pos + 1) % m]
        else:
            pos = bisect_left(verts, i)
            left, right = verts[pos - 1], verts[pos % m]
        in_cone = _center_in_cone(frame, i, left, right)
        bits.append(1 if in_cone != (i in vset) else 0)
    return tuple(bits)


def charvec_image(frame: RadialFrame, cap: int = GOOD_POLYGON_CAP) -> set[tuple[int, ...]]:
    """Set of characteristic vectors realized by the frame's good polygons."""
    return {polygon_charvec(frame, poly) for poly in enumerate_good_polygons(frame, cap)}


def find_charvec_collision(frame: RadialFrame, cap: int = GOOD_POLYGON_CAP):
    """Two distinct good polygons sharing a characteristic vector, or None.

    None certifies that the polygon-to-vector map is injective on this frame.
    """
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for poly in enumerate_good_polygons(frame, cap):
        vec = polygon_charvec(frame, poly)
        if vec in seen:
            return (seen[vec], poly)
        seen[vec] = poly
    return None


def move_along_ray(frame: RadialFrame, i: int, t) -> RadialFrame:
    """Rebuild the frame with point i moved to center + t * (point - center), t > 0."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("the ray parameter must be positive")
    c = frame.center
    p = frame.points[i]
    moved = Point(c.x + t * (p.x - c.x), c.y + t * (p.y - c.y))
    pts = list(frame.points)
    pts[i] = moved
    new = build_radial_frame(c, pts)
    # same rays, same reference, hence the same angular order
    assert new.points[i] == moved and new.reference == frame.reference
    return new


def ray_move_preserves_image(frame: RadialFrame, i: int, t, cap: int = GOOD_POLYGON_CAP) -> bool:
    """True iff moving point i along its ray leaves the set of realized vectors unchanged."""
    return charvec_image(frame, cap) == charvec_image(move_along_ray(frame, i, t), cap)


# ---------------------------------------------------------------------------
# Outward projection to convex position
# ---------------------------------------------------------------------------

def _ray_exit(ps: PointSet, origin: Point, through: Point):
    """Hull edge crossed by the ray origin -> through, with its parameters.

    Returns (edge position, t, u) where the exit point is
    origin + u*(through - origin) and sits at fraction t along the edge.
    """
    dx = through.x - origin.x
    dy = through.y - origin.y
    sides = ps.hull_sides()
    for pos, (qi, ri) in enumerate(sides):
        q = ps.points[qi]
        r = ps.points[ri]
        ex = r.x - q.x
        ey = r.y - q.y
        den = dx * ey - dy * ex
        if den == 0:
            continue
        wx = q.x - origin.x
        wy = q.y - origin.y
        u = (wx * ey - wy * ex) / den
        t = (wx * dy - wy * dx) / den
        if 0 < t < 1 and u > 0:
            assert u > 1, "interior point found outside its own hull"
            return pos, t, u
    raise AssertionError("ray from an interior configuration never left the hull")


def project_to_convex_position(ps: PointSet, pivot: int, max_rounds: int = 64) -> PointSet:
    """Push every non-pivot interior point outward along its pivot ray.

    The result keeps hull points and the pivot fixed, replaces each other
    interior point by one beyond the hull on the same ray, and is verified
    to be in general position with the hull and projected points in convex
    position.  Round 0 doubles each exit distance; later rounds place the
    points at heights following a concave per-edge profile, halving the
    scale each retry, so verification is guaranteed to succeed eventually.
    Point order is preserved, so indices keep their meaning.
    """
    if not 0 <= pivot < len(ps.points):
        raise ValueError(f"pivot {pivot} out of range")
    movers = [i for i in ps.interior if i != pivot]
    if not movers:
        return ps
    origin = ps.points[pivot]
    exits = {i: _ray_exit(ps, origin, ps.points[i]) for i in movers}
    hull_set = set(ps.hull)
    expected_hull = hull_set | set(movers)
    expected_interior = {pivot} - hull_set
    sides = ps.hull_sides()

    for rnd in range(max_rounds):
        new_pts = list(ps.points)
        for i in movers:
            pos, t, u = exits[i]
            if rnd == 0:
                overshoot = u
            else:
                qi, ri = sides[pos]
                q, r = ps.points[qi], ps.points[ri]
                den = ((ps.points[i].x - origin.x) * (r.y - q.y)
                       - (ps.points[i].y - origin.y) * (r.x - q.x))
                overshoot = Fraction(1, 1 << (rnd - 1)) * t * (1 - t) / den
            s = u + overshoot
            p = ps.points[i]
            new_pts[i] = Point(origin.x + s * (p.x - origin.x), origin.y + s * (p.y - origin.y))
        try:
            out = PointSet.from_points(new_pts)
        except ValueError:
            continue
        if set(out.hull) == expected_hull and set(out.interior) == expected_interior:
            return out
    raise ConstructionError(
        f"no valid outward placement found for pivot {pivot} within {max_rounds} rounds")
