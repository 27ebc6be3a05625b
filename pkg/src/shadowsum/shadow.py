"""Combinatorial shadows, admissible area colorings, and state sums.

A shadow is a decorated 4-valent graph on a surface: faces carry an Euler
characteristic and a gleam, edges carry a color and their two adjacent
faces, and vertices (double points) carry the two strand colors and the
four quadrant faces in the frozen convention: quadrants (j, k, m, n) in
cyclic order with (j, m) and (k, n) opposite, edge e1 between j and k,
edge e2 between j and n.

Two independent evaluation routes are implemented for double-point-free
links with fundamental colors and must agree exactly:

  * the gleam state sum over admissible area colorings, scaled by
    sin(pi/rbar)^(2-2g), and
  * the sum over admissible (level, sign-vector) pairs of products of
    sines of the integer face field xi = l - sum_j s_j ind_j, with a phase
    collecting winding * (xi_left^2 - xi_right^2) per loop.

For an admissible coloring eta the corresponding terms of the two routes
differ by the sign (-1)^(sum_t (chi_t + x_t) * 2 eta_t).  On the sphere
that exponent reduces to (number of loops) + (sum of windings) mod 2
independently of eta, i.e. to one global sign flip per loop of even
circle winding; the pair sum carries that sign explicitly.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ColorOutOfRange,
    HasVertices,
    InvariantViolation,
    MissingGleams,
    PreconditionError,
    UnsupportedColor,
)
from .geometry import FaceComplex, Link, face_complex, gleams_dpfree, winding_s1
from .quantum import Level, _triple_ok, sixj, u_exponent, v_dim

__all__ = [
    "ShadowFace",
    "ShadowEdge",
    "ShadowVertex",
    "Shadow",
    "AreaColoring",
    "AdmissiblePair",
    "BijectionReport",
    "check_shadow",
    "euler_identity_holds",
    "shadow_from_dpfree",
    "enumerate_colorings",
    "state_sum_general",
    "state_sum_dpfree",
    "enumerate_pairs",
    "coloring_of_pair",
    "check_bijection",
    "wlo_dpfree_pairsum",
    "wlo_dpfree_final",
]

# An area coloring is a tuple of doubled colors (2*eta), indexed by face id.
AreaColoring = tuple


@dataclass(frozen=True)
class ShadowFace:
    chi: int
    gleam: Fraction | None
    z: int = 0


@dataclass(frozen=True)
class ShadowEdge:
    color2: int
    left: int
    right: int


@dataclass(frozen=True)
class ShadowVertex:
    e1_2: int
    e2_2: int
    j: int
    k: int
    m: int
    n: int

    @property
    def quadrants(self) -> tuple[int, int, int, int]:
        return (self.j, self.k, self.m, self.n)


@dataclass(frozen=True)
class Shadow:
    faces: tuple[ShadowFace, ...]
    edges: tuple[ShadowEdge, ...]
    vertices: tuple[ShadowVertex, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(self.faces))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "vertices", tuple(self.vertices))


def check_shadow(shadow: Shadow) -> None:
    """Structural invariants: valid face references, consistent double-point
    counts, half-integral modified gleams."""
    nf = len(shadow.faces)
    for i, e in enumerate(shadow.edges):
        if not (0 <= e.left < nf and 0 <= e.right < nf):
            raise InvariantViolation(f"edge {i} references a missing face")
        if e.color2 < 0:
            raise InvariantViolation(f"edge {i} has negative color")
    for i, v in enumerate(shadow.vertices):
        for f in v.quadrants:
            if not 0 <= f < nf:
                raise InvariantViolation(f"vertex {i} references a missing face")
        if v.e1_2 < 0 or v.e2_2 < 0:
            raise InvariantViolation(f"vertex {i} has a negative strand color")
    touch = [0] * nf
    for v in shadow.vertices:
        for f in set(v.quadrants):
            touch[f] += 1
    for t, face in enumerate(shadow.faces):
        if face.z < 0:
            raise InvariantViolation(f"face {t} has negative double-point count")
        if face.z != touch[t]:
            raise InvariantViolation(
                f"face {t} declares z={face.z} but touches {touch[t]} double points")
        if face.gleam is not None and (2 * Fraction(face.gleam)).denominator != 1:
            raise InvariantViolation(f"face {t} gleam {face.gleam} is not half-integral")


def euler_identity_holds(shadow: Shadow) -> bool:
    """Euler count for spherical shadows: faces alone sum to 2 when the
    edges are closed curves, V - E + sum(chi) = 2 when they are arcs
    between double points."""
    total_chi = sum(f.chi for f in shadow.faces)
    if shadow.vertices:
        return len(shadow.vertices) - len(shadow.edges) + total_chi == 2
    return total_chi == 2


def shadow_from_dpfree(link: Link, fc: FaceComplex, gleams) -> Shadow:
    """Vertex-free shadow of a double-point-free link: one edge per loop
    with the faces on its two sides, gleams as computed from the windings."""
    faces = tuple(ShadowFace(chi=f.chi, gleam=Fraction(gleams[f.id]), z=0)
                  for f in fc.faces)
    edges = tuple(
        ShadowEdge(color2=lp.color2, left=fc.loop_sides[j][0], right=fc.loop_sides[j][1])
        for j, lp in enumerate(link.loops)
    )
    return Shadow(faces=faces, edges=edges, vertices=())


def enumerate_colorings(shadow: Shadow, level: Level) -> list[AreaColoring]:
    """All area colorings admissible with the edge colors, as tuples of
    doubled colors indexed by face id, in lexicographic order."""
    nf = len(shadow.faces)
    if shadow.edges and nf == 0:
        raise InvariantViolation("shadow has edges but no faces")
    deferred = [[] for _ in range(max(nf, 1))]
    for e in shadow.edges:
        if not 0 <= e.color2 <= level.k:
            raise ColorOutOfRange(
                f"edge color {Fraction(e.color2, 2)} outside color set of level {level.k}")
        a, b = sorted((e.left, e.right))
        deferred[b].append((a, e.color2))
    out: list[AreaColoring] = []
    assignment = [0] * nf

    def backtrack(f: int):
        if f == nf:
            out.append(tuple(assignment))
            return
        for t in range(level.k + 1):
            ok = True
            for g, c2 in deferred[f]:
                tg = t if g == f else assignment[g]
                if not _triple_ok(level.k, c2, t, tg):
                    ok = False
                    break
            if ok:
                assignment[f] = t
                backtrack(f + 1)

    if nf == 0:
        return [()]
    backtrack(0)
    return out


def _face_weight(level: Level, face: ShadowFace, t: int, modified: bool) -> complex:
    if face.gleam is None:
        raise MissingGleams("state sum requires a gleam on every face")
    spin = Fraction(t, 2)
    x = Fraction(face.gleam)
    if modified:
        x -= Fraction(face.z, 2)
    amp = v_dim(level, spin) ** face.chi
    return amp * cmath.exp(2.0 * float(x) * u_exponent(level, spin))


def state_sum_general(shadow: Shadow, level: Level) -> complex:
    """State sum over admissible colorings: one 6j-symbol per double point
    and one v^chi * exp(2 * modified-gleam * u) factor per face."""
    check_shadow(shadow)
    total = 0j
    for col in enumerate_colorings(shadow, level):
        vertex_part = 1.0
        for v in shadow.vertices:
            vertex_part *= sixj(
                level,
                Fraction(v.e1_2, 2), Fraction(col[v.j], 2), Fraction(col[v.k], 2),
                Fraction(v.e2_2, 2), Fraction(col[v.m], 2), Fraction(col[v.n], 2),
            )
        if vertex_part == 0.0:
            continue
        term = complex(vertex_part)
        for t, face in zip(col, shadow.faces):
            term *= _face_weight(level, face, t, modified=True)
        total += term
    return total


def state_sum_dpfree(shadow: Shadow, level: Level) -> complex:
    """Vertex-free state sum: product over faces of v^chi * exp(2 x u)."""
    if shadow.vertices:
        raise HasVertices("state sum for double-point-free links takes no vertices")
    check_shadow(shadow)
    total = 0j
    for col in enumerate_colorings(shadow, level):
        term = complex(1.0)
        for t, face in zip(col, shadow.faces):
            term *= _face_weight(level, face, t, modified=False)
        total += term
    return total


@dataclass(frozen=True)
class AdmissiblePair:
    """A level index l and per-loop signs whose face field xi stays in
    {1, ..., k+1}."""

    l: int
    signs: tuple[int, ...]
    xi: tuple[int, ...]  # indexed by face id


def enumerate_pairs(link: Link, level: Level, fc: FaceComplex) -> list[AdmissiblePair]:
    """All (l, sign-vector) pairs with xi = l - sum_j s_j ind_j mapping every
    face into {1, ..., k+1}; 2^n (k+1) candidates are filtered."""
    for j, lp in enumerate(link.loops):
        if lp.color2 != 1:
            raise UnsupportedColor(
                f"pair enumeration requires the fundamental color 1/2 on loop {j}")
    n = len(link.loops)
    kp1 = level.k + 1
    out = []
    for l in range(1, kp1 + 1):
        for signs in itertools.product((-1, 1), repeat=n):
            xi = tuple(
                l - sum(s * w for s, w in zip(signs, row))
                for row in fc.ind_table
            )
            if all(1 <= x <= kp1 for x in xi):
                out.append(AdmissiblePair(l=l, signs=signs, xi=xi))
    return out


def coloring_of_pair(pair: AdmissiblePair) -> AreaColoring:
    """Area coloring determined by a pair: eta = (xi - 1)/2 on every face."""
    return tuple(x - 1 for x in pair.xi)


@dataclass(frozen=True)
class BijectionReport:
    pairs_count: int
    colorings_count: int
    injective: bool
    surjective: bool
    missing: tuple
    extra: tuple

    @property
    def ok(self) -> bool:
        return self.injective and self.surjective and not self.missing and not self.extra


def check_bijection(link: Link, level: Level, fc: FaceComplex | None = None) -> BijectionReport:
    """Verify that pair -> coloring is a bijection onto the admissible
    colorings of the shadow with all edges colored 1/2."""
    if fc is None:
        fc = face_complex(link)
    pairs = enumerate_pairs(link, level, fc)
    images = [coloring_of_pair(p) for p in pairs]
    shadow = shadow_from_dpfree(link, fc, gleams_dpfree(link, fc))
    admissible = set(enumerate_colorings(shadow, level))
    image_set = set(images)
    return BijectionReport(
        pairs_count=len(pairs),
        colorings_count=len(admissible),
        injective=len(image_set) == len(images),
        surjective=admissible <= image_set,
        missing=tuple(sorted(admissible - image_set)),
        extra=tuple(sorted(image_set - admissible)),
    )


def wlo_dpfree_pairsum(link: Link, level: Level, fc: FaceComplex) -> complex:
    """Loop-observable value as a sum over admissible pairs.

    Each pair contributes prod_t sin(pi xi_t / rbar)^chi_t times the phase
    exp(-(pi i/rbar) * (1/2) * sum_j wind_j (xi(left_j)^2 - xi(right_j)^2));
    left_j is the face where ind_j is larger by one, and the swap-symmetric
    form makes the displacement side irrelevant.  The global parity factor
    (one sign per even-winding loop) keeps this route equal to
    wlo_dpfree_final term-for-term.
    """
    r = level.rbar
    winds = [winding_s1(lp) for lp in link.loops]
    parity = -1.0 if sum(1 for w in winds if w % 2 == 0) % 2 else 1.0
    total = 0j
    for pair in enumerate_pairs(link, level, fc):
        amp = 1.0
        for f in fc.faces:
            amp *= math.sin(math.pi * pair.xi[f.id] / r) ** f.chi
        s = 0
        for j, w in enumerate(winds):
            left, right = fc.loop_sides[j]
            s += w * (pair.xi[left] ** 2 - pair.xi[right] ** 2)
        total += parity * amp * cmath.exp(complex(0.0, -math.pi * s / (2.0 * r)))
    return total


def wlo_dpfree_final(link: Link, level: Level, fc: FaceComplex, genus: int = 0) -> complex:
    """Closed form of the loop observable: sin(pi/rbar)^(2-2g) times the
    vertex-free state sum of the link's shadow."""
    if genus != 0:
        raise PreconditionError("geometric input lives on the sphere; genus must be 0")
    shadow = shadow_from_dpfree(link, fc, gleams_dpfree(link, fc))
    scale = math.sin(math.pi / level.rbar) ** (2 - 2 * genus)
    return scale * state_sum_dpfree(shadow, level)
