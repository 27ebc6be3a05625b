"""Seeded random link configurations for cross-checks and experiments.

Configurations are families of pairwise-disjoint polygonal circles with a
random nesting forest, random orientations, and circle windings drawn from
a bounded range; geometry is placed so that disjointness holds by
construction.  Everything is driven by a caller-supplied random.Random, so
runs are reproducible.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .geometry import Link, Loop, make_loop

__all__ = ["polygon_circle", "random_dpfree_link", "random_crossing_pair"]


def polygon_circle(cx: float, cy: float, r: float, n: int = 16, *,
                   winding: int = 0, theta0: float = 0.5, ccw: bool = True,
                   phase: float = 0.0, color=Fraction(1, 2), framing: int = 0,
                   theta_fn=None) -> Loop:
    """Regular n-gon approximation of a circle with a linear (or supplied)
    circle-coordinate profile."""
    pts = []
    for i in range(n + 1):
        a = phase + 2.0 * math.pi * i / n * (1 if ccw else -1)
        if theta_fn is not None:
            th = theta_fn(i / n)
        else:
            th = theta0 + 2.0 * math.pi * winding * i / n
        pts.append((cx + r * math.cos(a), cy + r * math.sin(a), th))
    return make_loop(pts, color=color, framing=framing)


def random_dpfree_link(rng: random.Random, max_loops: int = 5, level: int = 1,
                       t0: float = 0.0, wind_range: tuple[int, int] = (-2, 2)) -> Link:
    """Random double-point-free link: disjoint circles with a random nesting
    forest, random orientations, and windings in wind_range."""
    n_loops = rng.randint(1, max_loops)
    parents = []
    for i in range(n_loops):
        parents.append(rng.choice([None] + list(range(i))))
    children = [[] for _ in range(n_loops)]
    roots = []
    for i, p in enumerate(parents):
        (roots if p is None else children[p]).append(i)

    geom = {}

    def place(node, cx, cy, r):
        geom[node] = (cx, cy, r)
        kids = children[node]
        for t, kid in enumerate(kids):
            ang = 2.0 * math.pi * t / max(len(kids), 1) + 0.37
            place(kid, cx + 0.52 * r * math.cos(ang), cy + 0.52 * r * math.sin(ang), 0.2 * r)

    for t, root in enumerate(roots):
        place(root, 4.0 * t, 0.0, 1.0)

    loops = []
    for i in range(n_loops):
        cx, cy, r = geom[i]
        w = rng.randint(*wind_range)
        theta0 = rng.uniform(0.1, 6.1)
        loops.append(polygon_circle(
            cx, cy, r, rng.randint(12, 18), winding=w, theta0=theta0,
            ccw=rng.random() < 0.5, phase=rng.uniform(0.0, 2.0 * math.pi)))
    return Link(tuple(loops), t0=t0, level=level)


def random_crossing_pair(rng: random.Random, level: int = 2, t0: float = 0.0) -> Link:
    """Two circles whose projections cross twice, with oscillating
    null-homologous circle coordinates; used for linking-number checks."""
    r1 = rng.uniform(0.8, 1.2)
    r2 = rng.uniform(0.8, 1.2)
    d = rng.uniform(0.6, 0.9) * (r1 + r2) / 2.0

    def profile(rng_):
        base = rng_.uniform(0.5, 5.8)
        amp = rng_.uniform(0.2, 1.4)
        ph = rng_.uniform(0.0, 2.0 * math.pi)
        return lambda u: base + amp * math.sin(2.0 * math.pi * u + ph)

    a = polygon_circle(0.0, 0.0, r1, rng.randint(14, 20),
                       ccw=rng.random() < 0.5, phase=rng.uniform(0, 6.28),
                       theta_fn=profile(rng))
    b = polygon_circle(d, 0.0, r2, rng.randint(14, 20),
                       ccw=rng.random() < 0.5, phase=rng.uniform(0, 6.28),
                       theta_fn=profile(rng))
    return Link((a, b), t0=t0, level=level)
