"""Deterministic point-set generators: convex rings, double circles, quasi-convex
interpolants and seeded random sets.

Randomness comes from a self-contained splitmix-style 64-bit generator so
that corpora are bit-identical across runs and platforms.  Floating point is
used only to sketch candidate coordinates; every output is validated with
the exact predicates (general position, convexity, closeness certificates)
and construction retries until the checks pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .closeness import classify, is_close
from .errors import ConstructionError
from .geom import Point, PointSet, general_position_violation, orient
from .charvec import AngleFrame, RadialFrame, build_angle_frame, build_radial_frame

_MASK64 = (1 << 64) - 1
_FAMILY_SEED = 11  # internal seed for the deterministic (seedless) families


class SplitMix64:
    """splitmix64: state += golden gamma; output is the mixed state."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish value in [0, n); modulo reduction, documented and deterministic."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n


@dataclass(frozen=True)
class GenSpec:
    """Declarative description of one generated instance."""

    family: str  # convex | double_circle | quasi_convex | random
    n: int
    scale: int = 64
    seed: int = 0
    sides: tuple[int, ...] | None = None  # quasi_convex only

    def instance_id(self) -> str:
        tail = f"-sides{','.join(map(str, self.sides))}" if self.sides else ""
        return f"{self.family}-n{self.n}-scale{self.scale}-seed{self.seed}{tail}"


def generate(spec: GenSpec) -> PointSet:
    if spec.family == "convex":
        return gen_convex(spec.n, spec.scale, spec.seed)
    if spec.family == "double_circle":
        if spec.n % 2:
            raise ValueError("double circle needs an even point count")
        return gen_double_circle(spec.n // 2, spec.scale)
    if spec.family == "quasi_convex":
        sides = spec.sides or ()
        return gen_quasi_convex(spec.n - len(sides), sides, spec.scale)
    if spec.family == "random":
        return gen_random(spec.n, 4 * spec.scale, spec.seed)
    raise ValueError(f"unknown family {spec.family!r}")


def _check_sizes(n: int, scale: int, minimum: int = 3) -> None:
    if n < minimum:
        raise ValueError(f"need at least {minimum} points, got {n}")
    if scale < 8:
        raise ValueError("scale must be at least 8")


def _convex_ring(n: int, radius: int, rng: SplitMix64) -> list[Point]:
    pts = []
    for k in range(n):
        jitter = rng.below(1 << 20) / (1 << 20)
        theta = 2.0 * math.pi * (k + 0.1 + 0.8 * jitter) / n
        pts.append(Point(round(radius * math.cos(theta)), round(radius * math.sin(theta))))
    return pts


def _is_strictly_convex_ring(pts: list[Point]) -> bool:
    n = len(pts)
    return all(orient(pts[m - 1], pts[m], pts[(m + 1) % n]) == 1 for m in range(n))


def gen_convex(n: int, scale: int = 64, seed: int = 0) -> PointSet:
    """n integer points in strictly convex counter-clockwise position."""
    _check_sizes(n, scale)
    rng = SplitMix64(seed)
    radius = max(scale, n)
    for attempt in range(96):
        pts = _convex_ring(n, radius, rng)
        if _is_strictly_convex_ring(pts) and general_position_violation(pts) is None:
            return PointSet.from_points(pts)
        if attempt % 8 == 7:
            radius *= 2
    raise ConstructionError(f"no strictly convex {n}-gon found at scale {scale}")


def _clear_denominators(pts: list[Point]) -> list[Point]:
    lcm = 1
    for p in pts:
        lcm = math.lcm(lcm, p.x.denominator, p.y.denominator)
    return [Point(p.x * lcm, p.y * lcm) for p in pts]


def _with_close_points(ring: list[Point], wanted_sides) -> PointSet | None:
    """Ring plus one certified-close interior point per selected side, or None.

    Points start near the side midpoints, offset inward; the offset shrinks
    until every closeness certificate holds.  Coordinates are cleared to
    integers before the final certification.
    """
    m = len(ring)
    wanted = sorted(wanted_sides)
    for shrink in range(48):
        lam = Fraction(1, 16 * (1 << shrink))
        pts = list(ring)
        for j in wanted:
            q = ring[j]
            r = ring[(j + 1) % m]
            # midpoint pulled inward along the left (interior) normal
            pts.append(Point((q.x + r.x) / 2 - lam * (r.y - q.y),
                             (q.y + r.y) / 2 + lam * (r.x - q.x)))
        pts = _clear_denominators(pts)
        try:
            ps = PointSet.from_points(pts)
        except ValueError:
            continue
        if set(ps.hull) != set(range(m)):
            continue
        ok = all(is_close(ps, m + pos, (j, (j + 1) % m)) for pos, j in enumerate(wanted))
        if ok and classify(ps).is_quasi_convex:
            return ps
    return None


def gen_double_circle(m: int, scale: int = 64) -> PointSet:
    """Convex m-gon plus one certified-close interior point per side (n = 2m)."""
    _check_sizes(m, scale)
    for doubling in range(8):
        ring = list(gen_convex(m, scale << doubling, _FAMILY_SEED).points)
        ps = _with_close_points(ring, range(m))
        if ps is not None:
            return ps
    raise ConstructionError(f"double circle with m={m} unobtainable at scale {scale}")


def gen_quasi_convex(n_hull: int, sides, scale: int = 64) -> PointSet:
    """Convex hull plus certified-close points on the selected ring sides."""
    _check_sizes(n_hull, scale)
    sides = tuple(sorted(set(sides)))
    if any(not 0 <= j < n_hull for j in sides):
        raise ValueError(f"side indices must be in [0, {n_hull})")
    for doubling in range(8):
        ring = list(gen_convex(n_hull, scale << doubling, _FAMILY_SEED).points)
        if not sides:
            return PointSet.from_points(ring)
        ps = _with_close_points(ring, sides)
        if ps is not None:
            return ps
    raise ConstructionError(
        f"quasi-convex set with hull {n_hull} and sides {sides} unobtainable at scale {scale}")


def gen_random(n: int, bbox: int = 256, seed: int = 0) -> PointSet:
    """n integer points uniform in a box, resampled until general position holds."""
    if n < 3:
        raise ValueError("need at least 3 points")
    if bbox < 8:
        raise ValueError("bounding box must be at least 8")
    rng = SplitMix64(seed)
    pts: list[Point] = []
    misses = 0
    while len(pts) < n:
        cand = Point(rng.below(bbox + 1), rng.below(bbox + 1))
        if general_position_violation(pts + [cand]) is None:
            pts.append(cand)
            continue
        misses += 1
        if misses > 200:
            bbox *= 2
            misses = 0
    return PointSet.from_points(pts)


def gen_angle_frame(n: int, scale: int = 64, seed: int = 0) -> AngleFrame:
    """Seeded frame: fixed arms, n random integer points strictly inside the angle."""
    if scale < 8:
        raise ValueError("scale must be at least 8")
    rng = SplitMix64(seed)
    apex = Point(0, scale)
    left = Point(-scale, 0)
    right = Point(scale, 0)
    pts: list[Point] = []
    while len(pts) < n:
        cand = Point(rng.below(2 * scale - 1) - (scale - 1), rng.below(2 * scale) - scale + 1)
        s = orient(apex, left, right)
        if orient(apex, left, cand) != s or orient(apex, right, cand) != -s:
            continue
        if general_position_violation([apex, left, right, *pts, cand]) is None:
            pts.append(cand)
    return build_angle_frame(apex, left, right, pts)


def gen_radial_frame(n: int, scale: int = 64, seed: int = 0) -> RadialFrame:
    """Seeded frame: center at the origin, n random integer points around it."""
    if scale < 8:
        raise ValueError("scale must be at least 8")
    rng = SplitMix64(seed)
    center = Point(0, 0)
    pts: list[Point] = []
    while len(pts) < n:
        cand = Point(rng.below(2 * scale + 1) - scale, rng.below(2 * scale + 1) - scale)
        if general_position_violation([center, *pts, cand]) is None:
            pts.append(cand)
    return build_radial_frame(center, pts)
