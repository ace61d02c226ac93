"""Exact counting and enumeration of full and partial triangulations.

A *full* triangulation of a point set uses every point as a vertex; a
*partial* triangulation may skip interior points but must use every hull
vertex.  Counting works by anchored-ear recursion over regions: a region is
a simple polygon (counter-clockwise index cycle) plus the set of points that
must appear as vertices strictly inside it.  The anchor edge is the
lexicographically smallest boundary edge by index pair; every triangulation
of the region has exactly one triangle on that edge, so summing over valid
apexes counts each triangulation once.  Placing the apex at a boundary
vertex splits the region in two; placing it at a required interior point
merges that point into the boundary.  Regions are memoized per invocation
(boundary rotated so the anchor comes first, plus the interior set).

``brute_force_count`` is a deliberately independent oracle: it counts
maximal pairwise-non-crossing edge sets by lexicographic backtracking over
the edge list, asserting that every maximal set has exactly 3i + 2h - 3
edges.

``count_partial`` sums full counts over interior subsets (iterated in
Gray-code order); each subset is counted independently, with no sharing of
sub-region results across subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import SizeCapError
from .geom import PointSet

ENUMERATION_CAP = 14
BRUTE_FORCE_CAP = 10


@dataclass(frozen=True)
class Triangulation:
    """A triangulation as index triples over a vertex subset of a PointSet."""

    vertex_subset: frozenset[int]
    triangles: tuple[tuple[int, int, int], ...]

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for a, b, c in self.triangles:
            out.add((a, b))
            out.add((a, c))
            out.add((b, c))
        return frozenset(out)


def _segments_cross(tab, a: int, b: int, c: int, d: int) -> bool:
    if a == c or a == d or b == c or b == d:
        return False
    return tab[a][b][c] * tab[a][b][d] < 0 and tab[c][d][a] * tab[c][d][b] < 0


def _point_in_cycle(pts, tab, cycle, w: int) -> bool:
    """Exact crossing-parity test; w must not lie on the cycle boundary."""
    inside = False
    wy = pts[w].y
    k = len(cycle)
    for m in range(k):
        u = cycle[m]
        v = cycle[(m + 1) % k]
        uy = pts[u].y
        vy = pts[v].y
        if uy <= wy < vy:
            if tab[u][v][w] > 0:
                inside = not inside
        elif vy <= wy < uy:
            if tab[u][v][w] < 0:
                inside = not inside
    return inside


def _anchor_rotation(boundary: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate a ccw cycle so the lexicographically smallest edge pair comes first."""
    k = len(boundary)
    best = None
    pos = 0
    for m in range(k):
        u = boundary[m]
        v = boundary[(m + 1) % k]
        pair = (u, v) if u < v else (v, u)
        if best is None or pair < best:
            best = pair
            pos = m
    return boundary[pos:] + boundary[:pos]


def _region_splits(ps: PointSet, cyc: tuple[int, ...], interior: frozenset[int]):
    """Yield (apex, sub1, sub2) for every valid anchor triangle of the region.

    The anchor edge is (cyc[0], cyc[1]).  Each sub-region is a (boundary,
    interior) pair, or None when the split degenerates to a bare edge.
    """
    tab = ps.orient_table()
    pts = ps.points
    a, b = cyc[0], cyc[1]
    k = len(cyc)
    edges = [(cyc[m], cyc[(m + 1) % k]) for m in range(k)]
    region = list(cyc[2:]) + sorted(interior)
    ta_b = tab[a][b]
    for v in region:
        if ta_b[v] != 1:
            continue
        empty = True
        for w in region:
            if w == v:
                continue
            if ta_b[w] == 1 and tab[b][v][w] == 1 and tab[v][a][w] == 1:
                empty = False
                break
        if not empty:
            continue
        blocked = False
        for p, q in edges:
            if _segments_cross(tab, a, v, p, q) or _segments_cross(tab, b, v, p, q):
                blocked = True
                break
        if blocked:
            continue
        if v in interior:
            yield v, (cyc[1:] + (cyc[0], v), interior - {v}), None
        else:
            j = cyc.index(v)
            b1 = cyc[1:j + 1]
            b2 = cyc[j:] + (cyc[0],)
            if interior:
                i1 = frozenset(w for w in interior
                               if len(b1) >= 3 and _point_in_cycle(pts, tab, b1, w))
                i2 = interior - i1
            else:
                i1 = i2 = frozenset()
            yield (v,
                   (b1, i1) if len(b1) >= 3 else None,
                   (b2, i2) if len(b2) >= 3 else None)


def _count_region(ps: PointSet, boundary: tuple[int, ...], interior: frozenset[int], memo) -> int:
    if len(boundary) == 3 and not interior:
        return 1
    cyc = _anchor_rotation(boundary)
    key = (cyc, interior)
    cached = memo.get(key)
    if cached is not None:
        return cached
    total = 0
    for _, sub1, sub2 in _region_splits(ps, cyc, interior):
        c = 1
        if sub1 is not None:
            c = _count_region(ps, sub1[0], sub1[1], memo)
        if sub2 is not None and c:
            c *= _count_region(ps, sub2[0], sub2[1], memo)
        total += c
    memo[key] = total
    return total


def _enumerate_region(ps, boundary, interior, memo) -> tuple:
    if len(boundary) == 3 and not interior:
        return ((tuple(sorted(boundary)),),)
    cyc = _anchor_rotation(boundary)
    key = (cyc, interior)
    cached = memo.get(key)
    if cached is not None:
        return cached
    out = []
    for v, sub1, sub2 in _region_splits(ps, cyc, interior):
        tri = tuple(sorted((cyc[0], cyc[1], v)))
        parts1 = _enumerate_region(ps, sub1[0], sub1[1], memo) if sub1 is not None else ((),)
        parts2 = _enumerate_region(ps, sub2[0], sub2[1], memo) if sub2 is not None else ((),)
        for p1 in parts1:
            for p2 in parts2:
                out.append((tri,) + p1 + p2)
    result = tuple(out)
    memo[key] = result
    return result


def _check_subset(ps: PointSet, vertex_subset) -> frozenset[int]:
    sub = frozenset(vertex_subset)
    if not sub <= set(range(len(ps.points))):
        raise ValueError("vertex subset contains unknown indices")
    if not set(ps.hull) <= sub:
        raise ValueError("vertex subset must contain every hull vertex")
    return sub


def count_on_subset(ps: PointSet, vertex_subset) -> int:
    """Number of triangulations of conv(M) using exactly the given vertices."""
    sub = _check_subset(ps, vertex_subset)
    interior = frozenset(sub - set(ps.hull))
    return _count_region(ps, ps.hull, interior, {})


def count_full(ps: PointSet) -> int:
    """Number of full triangulations (every point used as a vertex)."""
    return count_on_subset(ps, range(len(ps.points)))


def count_partial(ps: PointSet) -> int:
    """Number of partial triangulations: sum of full counts over interior subsets."""
    interior = ps.interior
    m = len(interior)
    hull = frozenset(ps.hull)
    total = 0
    for u in range(1 << m):
        g = u ^ (u >> 1)
        sub = hull | {interior[t] for t in range(m) if (g >> t) & 1}
        total += _count_region(ps, ps.hull, frozenset(sub - hull), {})
    return total


def enumerate_on_subset(ps: PointSet, vertex_subset, cap: int = ENUMERATION_CAP) -> list[Triangulation]:
    sub = _check_subset(ps, vertex_subset)
    if len(sub) > cap:
        raise SizeCapError(f"enumeration refused for {len(sub)} vertices (cap {cap})")
    interior = frozenset(sub - set(ps.hull))
    raw = _enumerate_region(ps, ps.hull, interior, {})
    return [Triangulation(sub, tuple(sorted(tris))) for tris in raw]


def enumerate_full(ps: PointSet, cap: int = ENUMERATION_CAP) -> list[Triangulation]:
    """All full triangulations; refuses instances above the size cap."""
    return enumerate_on_subset(ps, range(len(ps.points)), cap)


def enumerate_partial(ps: PointSet, cap: int = ENUMERATION_CAP) -> list[Triangulation]:
    """All partial triangulations, iterating interior subsets in Gray-code order."""
    if len(ps.points) > cap:
        raise SizeCapError(f"enumeration refused for {len(ps.points)} points (cap {cap})")
    interior = ps.interior
    m = len(interior)
    hull = frozenset(ps.hull)
    out: list[Triangulation] = []
    for u in range(1 << m):
        g = u ^ (u >> 1)
        sub = hull | {interior[t] for t in range(m) if (g >> t) & 1}
        out.extend(enumerate_on_subset(ps, sub, cap))
    return out


def brute_force_count(ps: PointSet, vertex_subset=None, cap: int = BRUTE_FORCE_CAP) -> int:
    """Independent oracle: count maximal non-crossing edge sets on the vertices.

    Backtracks over the lexicographic edge list.  A skipped edge must be
    crossed by some chosen edge for the final set to be maximal; every
    accepted leaf is asserted to have exactly 3i + 2h - 3 edges.
    """
    if vertex_subset is None:
        vertex_subset = range(len(ps.points))
    sub = _check_subset(ps, vertex_subset)
    if len(sub) > cap:
        raise SizeCapError(f"brute force refused for {len(sub)} vertices (cap {cap})")
    verts = sorted(sub)
    h = len(ps.hull)
    target = 3 * (len(verts) - h) + 2 * h - 3
    pairs = [(a, b) for a, b in combinations(verts, 2)]
    ne = len(pairs)
    tab = ps.orient_table()
    crossing = [0] * ne
    for e1 in range(ne):
        a, b = pairs[e1]
        for e2 in range(e1 + 1, ne):
            c, d = pairs[e2]
            if _segments_cross(tab, a, b, c, d):
                crossing[e1] |= 1 << e2
                crossing[e2] |= 1 << e1
    full = (1 << ne) - 1
    suffix = [full ^ ((1 << s) - 1) for s in range(ne + 1)]

    def search(idx: int, chosen: int, avail: int, pending: int) -> int:
        future = avail & suffix[idx]
        if chosen + future.bit_count() < target:
            return 0
        rest = pending
        while rest:
            low = rest & -rest
            if not crossing[low.bit_length() - 1] & future:
                return 0
            rest ^= low
        if idx == ne:
            if pending:
                return 0
            assert chosen == target, "maximal non-crossing set with unexpected edge count"
            return 1
        bit = 1 << idx
        if avail & bit:
            blockers = crossing[idx]
            taken = search(idx + 1, chosen + 1, avail & ~blockers, pending & ~blockers)
            skipped = search(idx + 1, chosen, avail, pending | bit)
            return taken + skipped
        return search(idx + 1, chosen, avail, pending)

    return search(0, 0, full, 0)


def check_triangulation(ps: PointSet, tri: Triangulation) -> None:
    """Independent validity check; raises ValueError on the first violation.

    Verifies vertex coverage, pairwise interior-disjointness, exact area
    coverage of the hull, absence of enclosed vertices and the Euler edge
    and triangle counts.
    """
    pts = ps.points
    tab = ps.orient_table()
    sub = tri.vertex_subset
    if not set(ps.hull) <= sub:
        raise ValueError("vertex subset does not contain the hull")
    used = set()
    for t in tri.triangles:
        if len(set(t)) != 3:
            raise ValueError(f"degenerate triangle {t}")
        if not set(t) <= sub:
            raise ValueError(f"triangle {t} uses a vertex outside the subset")
        used.update(t)
    if used != sub:
        raise ValueError("vertex subset not fully used by the triangles")

    def tri_edges(t):
        a, b, c = t
        return ((a, b), (a, c), (b, c))

    for t1, t2 in combinations(tri.triangles, 2):
        if t1 == t2:
            raise ValueError(f"repeated triangle {t1}")
        for e1 in tri_edges(t1):
            for e2 in tri_edges(t2):
                if _segments_cross(tab, *e1, *e2):
                    raise ValueError(f"triangles {t1} and {t2} overlap (crossing edges)")
        for v, other in ((t1, t2), (t2, t1)):
            oa, ob, oc = other
            s = tab[oa][ob][oc]
            for w in v:
                if w in other:
                    continue
                if tab[oa][ob][w] == s and tab[ob][oc][w] == s and tab[oc][oa][w] == s:
                    raise ValueError(f"triangles {t1} and {t2} overlap (nested vertex)")

    for a, b, c in tri.triangles:
        s = tab[a][b][c]
        for w in sub:
            if w in (a, b, c):
                continue
            if tab[a][b][w] == s and tab[b][c][w] == s and tab[c][a][w] == s:
                raise ValueError(f"vertex {w} lies inside triangle {(a, b, c)}")

    def doubled_area(a, b, c):
        v = (pts[b].x - pts[a].x) * (pts[c].y - pts[a].y) \
            - (pts[b].y - pts[a].y) * (pts[c].x - pts[a].x)
        return v if v > 0 else -v

    hull_area = 0
    h = ps.hull
    for m in range(1, len(h) - 1):
        hull_area += doubled_area(h[0], h[m], h[m + 1])
    covered = sum(doubled_area(*t) for t in tri.triangles)
    if covered != hull_area:
        raise ValueError(f"area mismatch: triangles cover {covered}, hull is {hull_area}")

    i = len(sub) - len(h)
    if len(tri.edges) != 3 * i + 2 * len(h) - 3:
        raise ValueError("edge count violates the Euler relation")
    if len(tri.triangles) != 2 * i + len(h) - 2:
        raise ValueError("triangle count violates the Euler relation")
