"""Combinatorial linking numbers for loop pairs in S^2 x S^1.

The t0-dependent pairing collects, over the transversal crossings of the
two projected curves, the product of the planar crossing sign with the
order of the two circle coordinates in the interval obtained by cutting
S^1 at t0.  The topological linking number of a null-homologous pair is
recovered from it by winding-number corrections at the t0-crossings of
either loop, and is independent of t0.

Push-offs displace the projected polygon to its left by a planar normal
offset, realizing a horizontal framing; the offset must stay below a third
of the minimum clearance between non-adjacent segments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateGeometry,
    NonTransverse,
    NotNullHomologous,
    OffsetTooLarge,
)
from .geometry import (
    ANGLE_TOL,
    TAU,
    Loop,
    _loop_marks,
    _proper_crossings,
    _unit,
    ind,
    loop_min_clearance,
    winding_s1,
)

__all__ = ["CrossingDatum", "crossings_between", "lk", "link_number", "pushoff", "self_link"]


@dataclass(frozen=True)
class CrossingDatum:
    """One transversal crossing of two projected curves."""

    s: float                  # parameter on the first loop
    u: float                  # parameter on the second loop
    point: tuple[float, float]
    cross_sign: int           # sign of det(first tangent, second tangent)
    theta_s: float            # circle coordinate of the first strand
    theta_u: float            # circle coordinate of the second strand

    def s1_order(self, t0: float) -> int:
        """+1 if the first strand sits below the second in the t0-cut order."""
        cs = ((self.theta_s - t0) / TAU) % 1.0
        cu = ((self.theta_u - t0) / TAU) % 1.0
        d = abs(cs - cu)
        if min(d, 1.0 - d) * TAU <= ANGLE_TOL:
            raise NonTransverse("strands share their circle coordinate at a crossing")
        return 1 if cs < cu else -1


def crossings_between(l: Loop, lt: Loop) -> tuple[CrossingDatum, ...]:
    """Transversal projected crossings of two distinct loops, ordered
    lexicographically in (segment of l, segment of lt)."""
    out = []
    for (si, sj, ta, tb, pt, sign) in _proper_crossings(l, lt, same=False):
        s = float((si + ta) / l.nseg)
        u = float((sj + tb) / lt.nseg)
        out.append(CrossingDatum(s, u, pt, sign, l.theta_at(s), lt.theta_at(u)))
    return tuple(out)


def lk(l: Loop, lt: Loop, t0: float) -> Fraction:
    """Half the signed crossing count under the t0-cut order; half-integral."""
    total = 0
    for c in crossings_between(l, lt):
        total += c.s1_order(t0) * c.cross_sign
    return Fraction(total, 2)


def pushoff(l: Loop, offset: float) -> Loop:
    """Planar normal offset of the projected polygon to the left of its
    direction by `offset`; the circle-coordinate lift is unchanged.

    Raises OffsetTooLarge if the offset exceeds a third of the loop's
    minimum clearance, or if the offset curve self-intersects or meets the
    original non-transversally.
    """
    if l.vertical:
        raise DegenerateGeometry("vertical loops have no planar push-off")
    if offset <= 0:
        raise OffsetTooLarge("offset must be positive")
    threshold = loop_min_clearance(l) / 3.0
    if offset >= threshold:
        raise OffsetTooLarge(
            f"offset {offset} is not below the admissibility threshold {threshold}")
    n = l.nseg
    pl = l.planar
    new_pts = []
    for i in range(n):
        prev = pl[(i - 1) % n]
        cur = pl[i]
        nxt = pl[i + 1] if i + 1 <= n else pl[1]
        d0 = _unit((cur[0] - prev[0], cur[1] - prev[1]))
        d1 = _unit((nxt[0] - cur[0], nxt[1] - cur[1]))
        n0 = (-d0[1], d0[0])
        n1 = (-d1[1], d1[0])
        # miter: intersect the two offset lines through cur
        cross = d0[0] * d1[1] - d0[1] * d1[0]
        if abs(cross) < 1e-12:
            new_pts.append((cur[0] + offset * n0[0], cur[1] + offset * n0[1]))
        else:
            # point p with (p - cur - offset*n0) || d0 and (p - cur - offset*n1) || d1
            t = offset * (n1[0] - n0[0]) * d1[1] - offset * (n1[1] - n0[1]) * d1[0]
            t /= cross
            new_pts.append((cur[0] + offset * n0[0] + t * d0[0],
                            cur[1] + offset * n0[1] + t * d0[1]))
    verts = tuple(
        (new_pts[i % n][0], new_pts[i % n][1], l.lifts[i]) for i in range(n + 1)
    )
    off = Loop(verts, l.color, l.framing, l.vertical)
    try:
        if _proper_crossings(off, off, same=True) and not _proper_crossings(l, l, same=True):
            raise OffsetTooLarge("offset curve of a simple projection self-intersects")
        _proper_crossings(l, off, same=False)
    except DegenerateGeometry as exc:
        raise OffsetTooLarge(f"offset curve degenerates: {exc}") from exc
    return off


def link_number(l: Loop, lt: Loop, t0: float) -> int:
    """Linking number of a null-homologous admissible pair, recovered from
    the t0-cut pairing with winding corrections at the t0-crossings."""
    if winding_s1(l) != 0 or winding_s1(lt) != 0:
        raise NotNullHomologous("linking number requires both circle windings to vanish")
    total = lk(l, lt, t0)
    for m in _loop_marks(l, t0):
        total -= m.eps * ind(lt, m.point)
    for m in _loop_marks(lt, t0):
        total -= m.eps * ind(l, m.point)
    if total.denominator != 1:
        raise NonTransverse("crossing data did not combine to an integer linking number")
    return int(total)


def self_link(l: Loop, t0: float) -> int:
    """Linking number of the loop with its horizontal push-off, evaluated at
    two offsets to confirm stability as the offset shrinks."""
    threshold = loop_min_clearance(l) / 3.0
    values = [link_number(l, pushoff(l, threshold * f), t0) for f in (0.5, 0.25)]
    if values[0] != values[1]:
        raise OffsetTooLarge(
            f"self-linking value not stable under offset refinement: {values}")
    return values[0]
