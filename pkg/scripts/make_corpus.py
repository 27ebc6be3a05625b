#!/usr/bin/env python3
"""Rebuild the regression corpus under corpus/.

Writes the link and shadow files and prints the evaluated quantities for
each so they can be compared against corpus/golden.tsv.  The golden file
itself is frozen by hand after oracle verification and is not rewritten
here.
"""

import math
import pathlib
import sys
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import shadowsum as ss
from shadowsum.random_links import polygon_circle

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def write(name: str, text: str):
    path = CORPUS / name
    path.write_text(text + "\n", encoding="utf-8")
    print(f"wrote {path.name}")


def link_of(loops, t0=0.0, level=1):
    return ss.Link(tuple(loops), t0=t0, level=level)


def main():
    CORPUS.mkdir(exist_ok=True)
    half = Fraction(1, 2)

    write("empty.link.json", ss.dumps_link(link_of([], level=1)))

    circle_w0 = polygon_circle(0, 0, 1.0, 16, winding=0, theta0=0.5, phase=0.13)
    write("circle_w0.link.json", ss.dumps_link(link_of([circle_w0], level=1)))

    circle_wp1 = polygon_circle(0, 0, 1.0, 16, winding=1, theta0=0.5, phase=0.13)
    write("circle_wp1.link.json", ss.dumps_link(link_of([circle_wp1], level=1)))

    circle_wm1 = polygon_circle(0, 0, 1.0, 16, winding=-1, theta0=0.5, phase=0.13)
    write("circle_wm1.link.json", ss.dumps_link(link_of([circle_wm1], level=1)))

    nested = [
        polygon_circle(0, 0, 1.0, 16, winding=1, theta0=0.5, phase=0.13),
        polygon_circle(0, 0, 0.45, 14, winding=-1, theta0=1.7, phase=0.29),
    ]
    write("nested_pair.link.json", ss.dumps_link(link_of(nested, level=1)))

    disjoint = [
        polygon_circle(0, 0, 1.0, 16, winding=0, theta0=0.4, phase=0.13),
        polygon_circle(3.0, 0.2, 0.8, 14, winding=0, theta0=1.1, phase=0.29),
    ]
    write("disjoint_pair.link.json", ss.dumps_link(link_of(disjoint, level=2)))

    hopf = [
        polygon_circle(0, 0, 1.0, 24, theta0=0.5, phase=0.13),
        polygon_circle(1.0, 0.0, 1.0, 22, phase=0.31,
                       theta_fn=lambda u: 0.55 + 0.35 * math.sin(2 * math.pi * u)),
    ]
    write("hopf.link.json", ss.dumps_link(link_of(hopf, t0=0.0, level=2)))

    concentric = [
        polygon_circle(0, 0, 1.0, 16, theta0=0.3, phase=0.13),
        polygon_circle(0, 0, 2.0, 18, theta0=1.0, phase=0.29),
    ]
    write("concentric.link.json", ss.dumps_link(link_of(concentric, level=2)))

    oscillating = polygon_circle(
        0, 0, 1.0, 20, phase=0.07,
        theta_fn=lambda u: 0.3 + 0.5 * math.sin(2 * math.pi * u))
    osc_framing = ss.self_link(oscillating, 0.0)
    oscillating = ss.make_loop(oscillating.vertices, color=half, framing=osc_framing)
    write("oscillating_circle.link.json", ss.dumps_link(link_of([oscillating], level=1)))

    def osc(base, amp, ph):
        return lambda u: base + amp * math.sin(2 * math.pi * u + ph)

    chain_geo = [
        polygon_circle(0, 0, 1.0, 16, phase=0.13, theta_fn=osc(0.8, 0.6, 0.2)),
        polygon_circle(1.4, 0.1, 1.0, 18, phase=0.37, theta_fn=osc(2.0, 0.9, 1.1)),
        polygon_circle(2.8, 0.0, 1.0, 20, phase=0.59, theta_fn=osc(4.1, 1.2, 2.3)),
    ]
    chain = [ss.make_loop(lp.vertices, color=half, framing=ss.self_link(lp, 0.0))
             for lp in chain_geo]
    write("three_chain.link.json", ss.dumps_link(link_of(chain, t0=0.0, level=3)))

    # figure eight: two lobes joined by one transversal self-crossing
    fig8_pts = []
    n = 14
    for i in range(n):
        a = 2 * math.pi * i / n
        fig8_pts.append((1.0 + 0.9 * math.cos(a + 2.1), 0.9 * math.sin(a + 2.1)))
    for i in range(n):
        a = 2 * math.pi * i / n
        fig8_pts.append((-1.0 + 0.9 * math.cos(a - 1.0), -0.9 * math.sin(a - 1.0)))
    fig8_pts.append(fig8_pts[0])
    fig8 = ss.make_loop(
        [(x, y, 1.5 + 0.8 * math.sin(2 * math.pi * i / (2 * n) + 0.4))
         for i, (x, y) in enumerate(fig8_pts)], color=half)
    fig8 = ss.make_loop(fig8.vertices, color=half, framing=ss.self_link(fig8, 0.0))
    write("figure8.link.json", ss.dumps_link(link_of([fig8], t0=0.0, level=2)))

    vertical = [
        ss.make_loop([(0.0, 0.0, 0.2), (0.0, 0.0, 0.2 + math.pi), (0.0, 0.0, 0.2 + 2 * math.pi)],
                     color=half, vertical=True),
        ss.make_loop([(2.0, 0.0, 1.2), (2.0, 0.0, 1.2 + math.pi), (2.0, 0.0, 1.2 + 2 * math.pi)],
                     color=Fraction(1), vertical=True),
    ]
    write("vertical_pair.link.json", ss.dumps_link(link_of(vertical, level=3)))

    write("empty.shadow.json", ss.dumps_shadow(
        ss.Shadow(faces=(ss.ShadowFace(chi=2, gleam=Fraction(0)),), edges=())))

    write("circle_w0.shadow.json", ss.dumps_shadow(ss.Shadow(
        faces=(ss.ShadowFace(chi=1, gleam=Fraction(0)), ss.ShadowFace(chi=1, gleam=Fraction(0))),
        edges=(ss.ShadowEdge(color2=1, left=0, right=1),),
    )))

    # two overlapping circles, second strand colored 0: faces O, A-only, B-only, lens
    two = ss.Shadow(
        faces=(
            ss.ShadowFace(chi=1, gleam=Fraction(1), z=2),   # 0: outer
            ss.ShadowFace(chi=1, gleam=Fraction(1), z=2),   # 1: inside first only
            ss.ShadowFace(chi=1, gleam=Fraction(1), z=2),   # 2: inside second only
            ss.ShadowFace(chi=1, gleam=Fraction(1), z=2),   # 3: lens
        ),
        edges=(
            ss.ShadowEdge(color2=1, left=3, right=2),  # first circle, arc inside second
            ss.ShadowEdge(color2=1, left=1, right=0),  # first circle, outer arc
            ss.ShadowEdge(color2=0, left=3, right=1),  # second circle, arc inside first
            ss.ShadowEdge(color2=0, left=2, right=0),  # second circle, outer arc
        ),
        vertices=(
            ss.ShadowVertex(e1_2=1, e2_2=0, j=0, k=1, m=3, n=2),
            ss.ShadowVertex(e1_2=1, e2_2=0, j=0, k=1, m=3, n=2),
        ),
    )
    write("twocircles.shadow.json", ss.dumps_shadow(two))

    # evaluate everything for comparison against golden.tsv
    print("\n--- evaluated values ---")
    for name in ("empty", "circle_w0", "circle_wp1", "circle_wm1",
                 "nested_pair", "disjoint_pair"):
        link = ss.load_link(CORPUS / f"{name}.link.json")
        lev = ss.Level(link.level)
        fc = ss.face_complex(link)
        v = ss.wlo_dpfree_final(link, lev, fc)
        p = ss.wlo_dpfree_pairsum(link, lev, fc)
        print(f"wlo dpfree {name}: {v:.12g} pairsum diff {abs(v - p):.2e}")
    for name in ("hopf", "concentric", "oscillating_circle", "three_chain", "figure8"):
        link = ss.load_link(CORPUS / f"{name}.link.json")
        va = ss.wlo_abelian(link)
        vi = ss.wlo_abelian_intermediate(link)
        print(f"wlo abelian {name}: {va:.12g} intermediate diff {abs(va - vi):.2e}")
    for name in ("circle_wp1",):
        link = ss.load_link(CORPUS / f"{name}.link.json")
        print(f"wlo abelian {name}: {ss.wlo_abelian(link):.12g}")
    link = ss.load_link(CORPUS / "vertical_pair.link.json")
    dims = tuple(lp.color2 + 1 for lp in link.loops)
    print(f"wlo vertical vertical_pair dims={dims}: "
          f"{ss.wlo_vertical(link.level, 0, dims):.12g}")
    for name, levels in (("empty.shadow", (1,)), ("circle_w0.shadow", (1,)),
                         ("twocircles.shadow", (1, 2))):
        shadow = ss.load_shadow(CORPUS / f"{name}.json")
        for k in levels:
            val = ss.state_sum_general(shadow, ss.Level(k))
            print(f"eval {name} k={k}: {val:.12g} "
                  f"({len(ss.enumerate_colorings(shadow, ss.Level(k)))} colorings)")


if __name__ == "__main__":
    main()
