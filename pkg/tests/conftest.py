import math
import pathlib
import sys

import pytest

SRC = pathlib.Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture(scope="session")
def corpus_dir() -> pathlib.Path:
    assert CORPUS.is_dir(), "regression corpus missing"
    return CORPUS


def winding_oracle(loop, p) -> int:
    """Angle-sum winding number, independent of the ray-crossing route."""
    total = 0.0
    px, py = p
    pl = loop.planar
    for i in range(loop.nseg):
        ax, ay = pl[i][0] - px, pl[i][1] - py
        bx, by = pl[i + 1][0] - px, pl[i + 1][1] - py
        total += math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    return round(total / (2.0 * math.pi))


def crossing_count_oracle(la, lb) -> int:
    """Float-based proper-crossing count over all segment pairs."""
    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (v > 0) - (v < 0)

    count = 0
    pa, pb = la.planar, lb.planar
    for i in range(la.nseg):
        for j in range(lb.nseg):
            a1, a2, b1, b2 = pa[i], pa[i + 1], pb[j], pb[j + 1]
            if (orient(a1, a2, b1) * orient(a1, a2, b2) < 0
                    and orient(b1, b2, a1) * orient(b1, b2, a2) < 0):
                count += 1
    return count


def diagram_linking_oracle(link_loops, t0=0.0) -> float:
    """Signed-crossing linking count for a two-loop diagram whose circle
    coordinates avoid t0: half the sum over crossings of the cross product
    sign taken with the lower strand's tangent first."""
    import shadowsum as ss

    l, lt = link_loops
    total = 0
    for c in ss.crossings_between(l, lt):
        cs = ((c.theta_s - t0) / (2 * math.pi)) % 1.0
        cu = ((c.theta_u - t0) / (2 * math.pi)) % 1.0
        total += c.cross_sign if cs < cu else -c.cross_sign
    return total / 2.0


def mark_oracle(loop, t0) -> list:
    """Crossing signs of the circle-coordinate lift through t0 by dense
    sampling between consecutive vertices."""
    lifts = loop.lifts
    n = loop.nseg
    lo = min(lifts) - 1.0
    hi = max(lifts) + 1.0
    tau = 2 * math.pi
    levels = [t0 + tau * m for m in range(math.ceil((lo - t0) / tau),
                                          math.floor((hi - t0) / tau) + 1)]
    events = []
    samples = [(i + f / 8.0) / n for i in range(n) for f in range(8)] + [1.0]

    def lift_at(u):
        i = min(int(u * n), n - 1)
        f = u * n - i
        return lifts[i] + f * (lifts[i + 1] - lifts[i])

    for lv in levels:
        prev = lift_at(samples[0]) - lv
        for u in samples[1:]:
            cur = lift_at(u) - lv
            if prev < 0 <= cur:
                events.append((u, 1))
            elif prev >= 0 > cur:
                events.append((u, -1))
            prev = cur
    events.sort()
    return [e for _, e in events]
