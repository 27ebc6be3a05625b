"""Piecewise-linear link model in (plane chart of S^2) x S^1.

The surface is S^2 with the marked point sigma_0 placed at infinity of the
working plane, so per-loop face winding numbers are literal planar winding
numbers and vanish on the face containing sigma_0.  A loop stores planar
vertices together with a real lift of its circle coordinate; the lift is
linear on each segment.

Planar predicates (orientation, segment crossing, winding) are evaluated
with exact rational arithmetic on the input coordinates; two points are
considered coincident iff they are within 1e-9.  Non-generic input is
rejected, never perturbed.

All operations are pure functions of immutable inputs and are safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegenerateGeometry,
    HasDoublePoints,
    InvariantViolation,
    PointOnCurve,
    PreconditionError,
    TangentialCrossing,
)

TAU = 2.0 * math.pi
COINCIDENCE_TOL = 1e-9
ANGLE_TOL = 1e-9

__all__ = [
    "Loop",
    "Link",
    "CrossingMark",
    "DoublePoint",
    "AdmissibilityReport",
    "Face",
    "FaceComplex",
    "make_loop",
    "validate",
    "winding_s1",
    "crossing_marks",
    "mark_side_points",
    "ind",
    "face_complex",
    "gleams_dpfree",
    "loop_min_clearance",
]


# ---------------------------------------------------------------------------
# exact planar predicates

def _orient(a, b, c) -> int:
    """Exact sign of the cross product (b - a) x (c - a).

    Fast float evaluation with a conservative error bound, falling back to
    exact rational arithmetic near zero."""
    detl = (b[0] - a[0]) * (c[1] - a[1])
    detr = (b[1] - a[1]) * (c[0] - a[0])
    det = detl - detr
    if abs(det) > 1e-12 * (abs(detl) + abs(detr)):
        return 1 if det > 0 else -1
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cx, cy = Fraction(c[0]), Fraction(c[1])
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def _seg_point_dist(p, a, b) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    den = dx * dx + dy * dy
    if den == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / den
    t = min(1.0, max(0.0, t))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def _seg_seg_dist(a1, a2, b1, b2) -> float:
    return min(
        _seg_point_dist(a1, b1, b2),
        _seg_point_dist(a2, b1, b2),
        _seg_point_dist(b1, a1, a2),
        _seg_point_dist(b2, a1, a2),
    )


def _bbox_overlap(a1, a2, b1, b2, margin=COINCIDENCE_TOL) -> bool:
    return (
        min(a1[0], a2[0]) - margin <= max(b1[0], b2[0])
        and min(b1[0], b2[0]) - margin <= max(a1[0], a2[0])
        and min(a1[1], a2[1]) - margin <= max(b1[1], b2[1])
        and min(b1[1], b2[1]) - margin <= max(a1[1], a2[1])
    )


# ---------------------------------------------------------------------------
# domain types

@dataclass(frozen=True)
class Loop:
    """Closed PL curve: (x, y, theta-lift) vertices with the closing vertex
    repeated, a half-integer color, and an integer framing."""

    vertices: tuple[tuple[float, float, float], ...]
    color: Fraction = Fraction(1, 2)
    framing: int = 0
    vertical: bool = False

    @property
    def nseg(self) -> int:
        return len(self.vertices) - 1

    @property
    def color2(self) -> int:
        return int(self.color * 2)

    @property
    def planar(self) -> tuple[tuple[float, float], ...]:
        return tuple((x, y) for x, y, _ in self.vertices)

    @property
    def lifts(self) -> tuple[float, ...]:
        return tuple(t for _, _, t in self.vertices)

    def segments(self):
        pl = self.planar
        for i in range(self.nseg):
            yield i, pl[i], pl[i + 1]

    def point_at(self, u: float) -> tuple[float, float]:
        i, frac = self._locate(u)
        (ax, ay), (bx, by) = self.planar[i], self.planar[i + 1]
        return (ax + frac * (bx - ax), ay + frac * (by - ay))

    def theta_at(self, u: float) -> float:
        i, frac = self._locate(u)
        la, lb = self.lifts[i], self.lifts[i + 1]
        return la + frac * (lb - la)

    def _locate(self, u: float) -> tuple[int, float]:
        u = u % 1.0
        n = self.nseg
        i = min(int(u * n), n - 1)
        return i, u * n - i

    def rotated(self, r: int) -> "Loop":
        """Move the base point to vertex r, preserving the lift increments."""
        n = self.nseg
        r %= n
        if r == 0:
            return self
        pl = self.planar[:-1]
        deltas = [self.lifts[i + 1] - self.lifts[i] for i in range(n)]
        lifts = [self.lifts[r]]
        for i in range(n):
            lifts.append(lifts[-1] + deltas[(r + i) % n])
        pts = [pl[(r + i) % n] for i in range(n)] + [pl[r]]
        verts = tuple((p[0], p[1], t) for p, t in zip(pts, lifts))
        return Loop(verts, self.color, self.framing, self.vertical)


def make_loop(vertices: Iterable[Sequence[float]], color=Fraction(1, 2),
              framing: int = 0, vertical: bool = False) -> Loop:
    """Build a Loop, checking closure and basic well-formedness."""
    verts = [(float(x), float(y), float(t)) for x, y, t in vertices]
    if len(verts) < 3:
        raise InvariantViolation("loop needs at least 3 vertices")
    for x, y, t in verts:
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(t)):
            raise InvariantViolation("non-finite loop coordinate")
    (x0, y0, _), (xn, yn, _) = verts[0], verts[-1]
    if math.hypot(xn - x0, yn - y0) > COINCIDENCE_TOL:
        raise InvariantViolation("loop does not close in the plane")
    verts[-1] = (x0, y0, verts[-1][2])
    w = (verts[-1][2] - verts[0][2]) / TAU
    if abs(w - round(w)) > 1e-9:
        raise InvariantViolation(
            f"circle-coordinate lift does not close up to 2*pi*integer (w = {w})")
    if vertical:
        if any(math.hypot(x - x0, y - y0) > COINCIDENCE_TOL for x, y, _ in verts):
            raise InvariantViolation("vertical loop must project to a single point")
        if round(w) == 0:
            raise InvariantViolation("vertical loop must wind around the circle factor")
        verts = [(x0, y0, t) for _, _, t in verts]
    else:
        for i in range(len(verts) - 1):
            (ax, ay, _), (bx, by, _) = verts[i], verts[i + 1]
            if math.hypot(bx - ax, by - ay) <= COINCIDENCE_TOL:
                raise DegenerateGeometry(f"zero-length projected segment at vertex {i}")
    col = Fraction(color)
    if (2 * col).denominator != 1:
        raise InvariantViolation(f"color {color!r} is not a half-integer")
    return Loop(tuple(verts), col, int(framing), bool(vertical))


@dataclass(frozen=True)
class Link:
    """Ordered loops with the reference angle t0 and the level k."""

    loops: tuple[Loop, ...]
    t0: float = 0.0
    level: int = 1

    def __post_init__(self):
        object.__setattr__(self, "loops", tuple(self.loops))
        if not (0.0 <= self.t0 < TAU):
            raise InvariantViolation(f"t0 must lie in [0, 2*pi), got {self.t0}")
        if not isinstance(self.level, int) or self.level < 1:
            raise InvariantViolation(f"level must be a positive integer, got {self.level!r}")
        for i, lp in enumerate(self.loops):
            if not 0 <= lp.color2 <= self.level:
                raise InvariantViolation(
                    f"loop {i} color {lp.color} outside color set of level {self.level}")


def winding_s1(loop: Loop) -> int:
    """Winding number of the circle coordinate: (theta_last - theta_first)/2pi."""
    return round((loop.lifts[-1] - loop.lifts[0]) / TAU)


# ---------------------------------------------------------------------------
# pairwise crossing enumeration

def _proper_crossings(la: Loop, lb: Loop, same: bool):
    """All transversal crossings of the two projected polygons, ordered
    lexicographically in (segment of la, segment of lb).

    Yields (seg_a, seg_b, ta, tb, point, cross_sign) with exact Fraction
    parameters.  Raises DegenerateGeometry for grazing or overlapping
    segments.  With same=True, la and lb are the same loop and adjacent
    segments are skipped.
    """
    na = la.nseg
    pa = la.planar
    pb = lb.planar
    out = []
    for i in range(na):
        a1, a2 = pa[i], pa[i + 1]
        for j in range(lb.nseg):
            if same:
                if j <= i:
                    continue
                if j == i + 1 or (i == 0 and j == na - 1):
                    continue
            b1, b2 = pb[j], pb[j + 1]
            if not _bbox_overlap(a1, a2, b1, b2):
                continue
            o1 = _orient(a1, a2, b1)
            o2 = _orient(a1, a2, b2)
            o3 = _orient(b1, b2, a1)
            o4 = _orient(b1, b2, a2)
            if o1 * o2 < 0 and o3 * o4 < 0:
                r = (Fraction(a2[0]) - Fraction(a1[0]), Fraction(a2[1]) - Fraction(a1[1]))
                s = (Fraction(b2[0]) - Fraction(b1[0]), Fraction(b2[1]) - Fraction(b1[1]))
                q = (Fraction(b1[0]) - Fraction(a1[0]), Fraction(b1[1]) - Fraction(a1[1]))
                den = r[0] * s[1] - r[1] * s[0]
                ta = (q[0] * s[1] - q[1] * s[0]) / den
                tb = (q[0] * r[1] - q[1] * r[0]) / den
                pt = (float(Fraction(a1[0]) + ta * r[0]),
                      float(Fraction(a1[1]) + ta * r[1]))
                out.append((i, j, ta, tb, pt, 1 if den > 0 else -1))
            elif (o1, o2, o3, o4).count(0) > 0:
                # an endpoint grazes or the segments are collinear
                if (
                    (o1 == 0 and _bbox_overlap(a1, a2, b1, b1, 0.0))
                    or (o2 == 0 and _bbox_overlap(a1, a2, b2, b2, 0.0))
                    or (o3 == 0 and _bbox_overlap(b1, b2, a1, a1, 0.0))
                    or (o4 == 0 and _bbox_overlap(b1, b2, a2, a2, 0.0))
                ):
                    raise DegenerateGeometry(
                        f"segments graze or overlap (segments {i}, {j})")
    return out


def _vertex_clearance_check(loops: Sequence[Loop]):
    """Reject vertices lying within the coincidence tolerance of a foreign
    (non-incident) segment."""
    for li, la in enumerate(loops):
        for vi, v in enumerate(la.planar[:-1]):
            for lj, lb in enumerate(loops):
                for j, b1, b2 in lb.segments():
                    if li == lj:
                        n = la.nseg
                        if j == vi or (j + 1) % n == vi:
                            continue
                    if _seg_point_dist(v, b1, b2) <= COINCIDENCE_TOL:
                        raise DegenerateGeometry(
                            f"vertex {vi} of loop {li} lies on segment {j} of loop {lj}")


# ---------------------------------------------------------------------------
# admissibility

@dataclass(frozen=True)
class DoublePoint:
    point: tuple[float, float]
    strands: tuple[tuple[int, float], ...]  # (loop index, loop parameter)
    thetas: tuple[float, float]


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    double_points: tuple[DoublePoint, ...]
    triple_points: tuple[tuple[float, float], ...]
    parallel_tangents: tuple[tuple[float, float], ...]
    t0_degeneracies: tuple[tuple[int, str, float], ...]
    t0_double_point_hits: tuple[tuple[float, float], ...]
    strand_collisions: tuple[tuple[float, float], ...]
    vertical_loops: tuple[int, ...]


def _angle_eq(a: float, b: float, tol: float = ANGLE_TOL) -> bool:
    d = (a - b) % TAU
    return d <= tol or TAU - d <= tol


def _lift_levels(loop: Loop, t0: float):
    """Integer m such that t0 + 2*pi*m lies in the range of the lift."""
    lo = min(loop.lifts) - 1.0
    hi = max(loop.lifts) + 1.0
    m0 = math.ceil((lo - t0) / TAU)
    m1 = math.floor((hi - t0) / TAU)
    return [t0 + TAU * m for m in range(m0, m1 + 1)]


def _t0_degeneracies(j: int, loop: Loop, t0: float):
    """Constant-at-t0 segments and tangential touches of the lift."""
    out = []
    n = loop.nseg
    lifts = loop.lifts
    levels = _lift_levels(loop, t0)
    for i in range(n):
        la, lb = lifts[i], lifts[i + 1]
        if abs(lb - la) <= ANGLE_TOL and any(abs(la - lv) <= ANGLE_TOL for lv in levels):
            out.append((j, "constant-at-t0", i / n))
    deltas = [lifts[i + 1] - lifts[i] for i in range(n)]
    for i in range(n):
        if not any(abs(lifts[i] - lv) <= ANGLE_TOL for lv in levels):
            continue
        prev = next((deltas[(i - 1 - s) % n] for s in range(n)
                     if abs(deltas[(i - 1 - s) % n]) > ANGLE_TOL), None)
        nxt = next((deltas[(i + s) % n] for s in range(n)
                    if abs(deltas[(i + s) % n]) > ANGLE_TOL), None)
        if prev is None or nxt is None:
            continue  # the whole lift sits at t0; reported as constant-at-t0
        if (prev > 0) != (nxt > 0):
            out.append((j, "tangential", i / n))
    return out


def validate(link: Link) -> AdmissibilityReport:
    """Check the admissibility of a link: finitely many transversal double
    points, no triple points, no degenerate circle-coordinate events at t0,
    and no double point with a strand at circle coordinate t0.

    Structural defects of the PL input (grazing segments, vertices on
    foreign segments) raise DegenerateGeometry; everything else is reported.
    """
    loops = link.loops
    vertical = tuple(i for i, lp in enumerate(loops) if lp.vertical)
    regular = [(i, lp) for i, lp in enumerate(loops) if not lp.vertical]

    _vertex_clearance_check([lp for _, lp in regular])

    events = []  # (point, (loop, param), (loop, param), thetas)
    for ai in range(len(regular)):
        i, la = regular[ai]
        for bi in range(ai, len(regular)):
            j, lb = regular[bi]
            for (si, sj, ta, tb, pt, _sign) in _proper_crossings(la, lb, same=(ai == bi)):
                ua = float((si + ta) / la.nseg)
                ub = float((sj + tb) / lb.nseg)
                tha = la.theta_at(ua)
                thb = lb.theta_at(ub)
                events.append((pt, (i, ua), (j, ub), (tha, thb)))

    # cluster events by planar point; two events within tolerance mean at
    # least three strands through one point
    clusters: list[list] = []
    for ev in events:
        for cl in clusters:
            if math.hypot(ev[0][0] - cl[0][0][0], ev[0][1] - cl[0][0][1]) <= COINCIDENCE_TOL:
                cl.append(ev)
                break
        else:
            clusters.append([ev])

    double_points = []
    triple_points = []
    strand_collisions = []
    t0_hits = []
    for cl in clusters:
        if len(cl) > 1:
            triple_points.append(cl[0][0])
            continue
        pt, sa, sb, (tha, thb) = cl[0]
        double_points.append(DoublePoint(pt, tuple(sorted((sa, sb))), (tha, thb)))
        if _angle_eq(tha, thb):
            strand_collisions.append(pt)
        if _angle_eq(tha, link.t0) or _angle_eq(thb, link.t0):
            t0_hits.append(pt)

    t0_deg = []
    for i, lp in regular:
        t0_deg.extend(_t0_degeneracies(i, lp, link.t0))

    double_points.sort(key=lambda d: d.strands)
    ok = not (triple_points or t0_deg or t0_hits or strand_collisions or vertical)
    return AdmissibilityReport(
        ok=ok,
        double_points=tuple(double_points),
        triple_points=tuple(sorted(triple_points)),
        parallel_tangents=(),  # grazing PL tangencies raise DegenerateGeometry instead
        t0_degeneracies=tuple(sorted(t0_deg)),
        t0_double_point_hits=tuple(sorted(t0_hits)),
        strand_collisions=tuple(sorted(strand_collisions)),
        vertical_loops=vertical,
    )


# ---------------------------------------------------------------------------
# crossings of the circle coordinate

@dataclass(frozen=True)
class CrossingMark:
    """A parameter where the circle coordinate of a loop crosses t0."""

    loop: int
    param: float
    point: tuple[float, float]
    eps: int  # +1 iff the lift increases through t0
    tangent: tuple[float, float]


def _unit(v):
    n = math.hypot(v[0], v[1])
    return (v[0] / n, v[1] / n)


def _loop_marks(loop: Loop, t0: float, loop_index: int = 0):
    n = loop.nseg
    levels_probe = _lift_levels(loop, t0)
    rot = None
    for r in range(n):
        if not any(abs(loop.lifts[r] - lv) <= ANGLE_TOL for lv in levels_probe):
            rot = r
            break
    if rot is None:
        raise TangentialCrossing("every vertex of the lift sits at t0")
    rl = loop.rotated(rot)
    lifts = rl.lifts
    levels = _lift_levels(rl, t0)
    marks = []
    for i in range(n):
        la, lb = lifts[i], lifts[i + 1]
        if abs(lb - la) <= ANGLE_TOL:
            if any(abs(la - lv) <= ANGLE_TOL for lv in levels):
                raise TangentialCrossing("constant circle coordinate at t0")
            continue
        for lv in levels:
            lo, hi = (la, lb) if la < lb else (lb, la)
            if lv < lo - ANGLE_TOL or lv > hi + ANGLE_TOL:
                continue
            if abs(lv - la) <= ANGLE_TOL:
                continue  # counted at the previous segment's right endpoint
            if abs(lv - lb) <= ANGLE_TOL:
                # crossing exactly at vertex i+1
                deltas = [lifts[m + 1] - lifts[m] for m in range(n)]
                nxt = next((deltas[(i + 1 + s) % n] for s in range(n)
                            if abs(deltas[(i + 1 + s) % n]) > ANGLE_TOL), None)
                if nxt is None or (nxt > 0) != (lb - la > 0):
                    raise TangentialCrossing(
                        f"lift touches t0 without crossing at vertex {i + 1}")
                u_rot = (i + 1) / n
                pl = rl.planar
                d1 = _unit((pl[i + 1][0] - pl[i][0], pl[i + 1][1] - pl[i][1]))
                i2 = (i + 1) % n
                d2 = _unit((pl[i2 + 1][0] - pl[i2][0], pl[i2 + 1][1] - pl[i2][1]))
                tangent = _unit((d1[0] + d2[0], d1[1] + d2[1]))
                eps = 1 if lb > la else -1
            else:
                frac = (lv - la) / (lb - la)
                u_rot = (i + frac) / n
                pl = rl.planar
                tangent = _unit((pl[i + 1][0] - pl[i][0], pl[i + 1][1] - pl[i][1]))
                eps = 1 if lb > la else -1
            param = (u_rot + rot / n) % 1.0
            marks.append(CrossingMark(loop_index, param, rl.point_at(u_rot), eps, tangent))
    marks.sort(key=lambda m: m.param)
    return marks


def crossing_marks(link: Link) -> tuple[CrossingMark, ...]:
    """All parameters where a loop's circle coordinate crosses t0, with the
    sign of the crossing.  Loops are internally rebased so that no crossing
    sits at the parameter seam."""
    marks = []
    for j, lp in enumerate(link.loops):
        if lp.vertical:
            raise PreconditionError("vertical loops have no crossing marks")
        lm = _loop_marks(lp, link.t0, j)
        if sum(m.eps for m in lm) != winding_s1(lp):
            raise TangentialCrossing(
                f"crossing signs of loop {j} do not sum to its winding number")
        marks.extend(lm)
    return tuple(marks)


def mark_side_points(link: Link, mark: CrossingMark, scale: float = 0.25):
    """Probe points just left and just right of the strand at a crossing
    mark, displaced by a fraction of the local clearance."""
    px, py = mark.point
    clearance = math.inf
    for j, loop in enumerate(link.loops):
        for _i, a, b in loop.segments():
            d = _seg_point_dist((px, py), a, b)
            if j == mark.loop and d <= COINCIDENCE_TOL:
                continue  # a segment through the mark itself
            clearance = min(clearance, d)
    if not math.isfinite(clearance) or clearance <= 0:
        raise DegenerateGeometry("no clearance around crossing mark")
    d = clearance * scale
    nx, ny = -mark.tangent[1], mark.tangent[0]
    return (px + d * nx, py + d * ny), (px - d * nx, py - d * ny)


# ---------------------------------------------------------------------------
# planar winding numbers

def ind(loop: Loop, p: Sequence[float]) -> int:
    """Planar winding number of the projected polygon around p, vanishing
    near infinity (and hence at sigma_0)."""
    px, py = float(p[0]), float(p[1])
    if loop.vertical:
        base = loop.planar[0]
        if math.hypot(px - base[0], py - base[1]) <= COINCIDENCE_TOL:
            raise PointOnCurve("point coincides with a vertical loop's base point")
        return 0
    for _, a, b in loop.segments():
        if _seg_point_dist((px, py), a, b) <= COINCIDENCE_TOL:
            raise PointOnCurve(f"point {(px, py)} lies on the projected curve")
    w = 0
    for _, a, b in loop.segments():
        if a[1] <= py < b[1] and _orient(a, b, (px, py)) > 0:
            w += 1
        elif b[1] <= py < a[1] and _orient(a, b, (px, py)) < 0:
            w -= 1
    return w


def _loop_orientation(loop: Loop) -> int:
    """+1 for a counterclockwise projected polygon, -1 for clockwise."""
    area = Fraction(0)
    pl = loop.planar
    for i in range(loop.nseg):
        (ax, ay), (bx, by) = pl[i], pl[i + 1]
        area += Fraction(ax) * Fraction(by) - Fraction(bx) * Fraction(ay)
    if area == 0:
        raise DegenerateGeometry("projected polygon has zero signed area")
    return 1 if area > 0 else -1


# ---------------------------------------------------------------------------
# face complex of a double-point-free link

@dataclass(frozen=True)
class Face:
    id: int
    chi: int
    boundary: tuple[int, ...]          # loop indices on the face boundary
    inner_of: int | None               # loop whose interior region this is


@dataclass(frozen=True)
class FaceComplex:
    """Complement regions of pairwise-disjoint projected Jordan curves on
    S^2, with per-loop winding numbers constant on each face."""

    link: Link = field(repr=False)
    faces: tuple[Face, ...]
    ind_table: tuple[tuple[int, ...], ...]   # [face][loop]
    loop_sides: tuple[tuple[int, int], ...]  # (left face, right face) per loop
    outer: int
    parent: tuple[int | None, ...]           # nesting forest over loops

    def face_of_point(self, p) -> int:
        containing = [j for j, lp in enumerate(self.link.loops) if ind(lp, p) != 0]
        if not containing:
            return self.outer
        depth = {j: sum(1 for i in containing if self._contains(i, j)) for j in containing}
        return max(containing, key=lambda j: depth[j])

    def _contains(self, i: int, j: int) -> bool:
        if i == j:
            return False
        k = self.parent[j]
        while k is not None:
            if k == i:
                return True
            k = self.parent[k]
        return False

    def sample_point(self, face_id: int) -> tuple[float, float]:
        if face_id == self.outer:
            xs = [x for lp in self.link.loops for x, _ in lp.planar] or [0.0]
            ys = [y for lp in self.link.loops for _, y in lp.planar] or [0.0]
            return (max(xs) + 1.0, max(ys) + 1.0)
        lp = self.link.loops[face_id]
        o = _loop_orientation(lp)
        for i, a, b in lp.segments():
            mx, my = (a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0
            dx, dy = b[0] - a[0], b[1] - a[1]
            nx, ny = _unit((-dy, dx))  # left normal
            clearance = min(
                (_seg_point_dist((mx, my), c, d)
                 for j, loop in enumerate(self.link.loops)
                 for s, c, d in loop.segments()
                 if not (j == face_id and s == i)),
                default=math.hypot(dx, dy),
            )
            delta = 0.3 * min(clearance, math.hypot(dx, dy))
            cand = (mx + o * delta * nx, my + o * delta * ny)
            try:
                if self.face_of_point(cand) == face_id:
                    return cand
            except PointOnCurve:
                continue
        raise DegenerateGeometry(f"could not find an interior point of face {face_id}")


def face_complex(link: Link) -> FaceComplex:
    """Decompose the complement of a double-point-free link projection.

    Faces are indexed 0..n-1 (region immediately inside loop j) plus the
    outer face n containing sigma_0; Euler characteristics satisfy
    sum_t chi(X_t) = 2.
    """
    report = validate(link)
    if report.double_points or report.triple_points:
        raise HasDoublePoints("face complex requires a projection without double points")
    if report.vertical_loops:
        raise PreconditionError("vertical loops have no planar face structure")
    if not report.ok:
        raise InvariantViolation("link failed admissibility validation")

    loops = link.loops
    n = len(loops)
    orient = [_loop_orientation(lp) for lp in loops]
    inside = [[False] * n for _ in range(n)]  # inside[i][j]: loop j lies inside loop i
    for i in range(n):
        for j in range(n):
            if i != j:
                inside[i][j] = ind(loops[i], loops[j].planar[0]) != 0

    depth = [sum(1 for i in range(n) if inside[i][j]) for j in range(n)]
    parent: list[int | None] = [None] * n
    for j in range(n):
        containers = [i for i in range(n) if inside[i][j]]
        if containers:
            parent[j] = max(containers, key=lambda i: depth[i])

    children = [[] for _ in range(n)]
    roots = []
    for j in range(n):
        if parent[j] is None:
            roots.append(j)
        else:
            children[parent[j]].append(j)

    outer = n
    faces = []
    for j in range(n):
        faces.append(Face(id=j, chi=1 - len(children[j]),
                          boundary=tuple([j] + children[j]), inner_of=j))
    faces.append(Face(id=outer, chi=2 - len(roots), boundary=tuple(roots), inner_of=None))

    if sum(f.chi for f in faces) != 2:
        raise InvariantViolation("face Euler characteristics do not sum to 2")

    def chain(j):
        out = set()
        k = j
        while k is not None:
            out.add(k)
            k = parent[k]
        return out

    ind_table = []
    for f in faces:
        if f.id == outer:
            ind_table.append(tuple(0 for _ in range(n)))
        else:
            ch = chain(f.id)
            ind_table.append(tuple(orient[j] if j in ch else 0 for j in range(n)))

    loop_sides = []
    for j in range(n):
        inner_face = j
        outer_face = parent[j] if parent[j] is not None else outer
        if orient[j] > 0:
            loop_sides.append((inner_face, outer_face))
        else:
            loop_sides.append((outer_face, inner_face))

    return FaceComplex(
        link=link,
        faces=tuple(faces),
        ind_table=tuple(ind_table),
        loop_sides=tuple(loop_sides),
        outer=outer,
        parent=tuple(parent),
    )


def gleams_dpfree(link: Link, fc: FaceComplex) -> tuple[int, ...]:
    """Face decorations for a double-point-free link: each face collects
    wind(loop) * (+1 if it is the loop's left face else -1) over the loops
    on its boundary."""
    winds = [winding_s1(lp) for lp in link.loops]
    out = []
    for f in fc.faces:
        x = 0
        for j in f.boundary:
            left, _right = fc.loop_sides[j]
            x += winds[j] * (1 if f.id == left else -1)
        out.append(x)
    return tuple(out)


def loop_min_clearance(loop: Loop) -> float:
    """Minimum distance between non-adjacent, non-crossing segments of the
    projection; the push-off admissibility threshold is a third of this."""
    crossing = {(i, j) for (i, j, *_rest) in _proper_crossings(loop, loop, same=True)}
    n = loop.nseg
    pl = loop.planar
    best = math.inf
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if (i, j) in crossing:
                continue
            best = min(best, _seg_seg_dist(pl[i], pl[i + 1], pl[j], pl[j + 1]))
    if not math.isfinite(best):
        raise DegenerateGeometry("loop has no non-adjacent segment pairs")
    return best
