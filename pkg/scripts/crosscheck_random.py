#!/usr/bin/env python3
"""Randomized cross-check experiment: on seeded random double-point-free
configurations, compare the pair-sum route against the gleam state-sum
route and verify the pair/coloring bijection.

    python scripts/crosscheck_random.py --configs 200 --seed 2024
"""

import argparse
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import shadowsum as ss
from shadowsum.quantum import Level
from shadowsum.random_links import random_dpfree_link


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--configs", type=int, default=200)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--max-loops", type=int, default=5)
    ap.add_argument("--kmax", type=int, default=6)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    start = time.perf_counter()
    worst_rel = 0.0
    worst_case = None
    bij_failures = 0
    by_k = {}
    done = 0
    while done < args.configs:
        k = 1 + done % args.kmax
        link = random_dpfree_link(rng, max_loops=args.max_loops, level=k)
        if not ss.validate(link).ok:
            continue
        lev = Level(k)
        fc = ss.face_complex(link)
        a = ss.wlo_dpfree_pairsum(link, lev, fc)
        b = ss.wlo_dpfree_final(link, lev, fc)
        scale = max(abs(a), abs(b))
        rel = abs(a - b) / scale if scale > 1e-12 else abs(a - b)
        if rel > worst_rel:
            worst_rel = rel
            worst_case = (done, k, len(link.loops))
        report = ss.check_bijection(link, lev, fc)
        if not report.ok:
            bij_failures += 1
        row = by_k.setdefault(k, [0, 0.0])
        row[0] += 1
        row[1] = max(row[1], rel)
        done += 1
    elapsed = time.perf_counter() - start

    print(f"configs: {done}   seed: {args.seed}   elapsed: {elapsed:.2f}s")
    print(f"{'k':>3} {'count':>6} {'worst rel diff':>16}")
    for k in sorted(by_k):
        count, worst = by_k[k]
        print(f"{k:>3} {count:>6} {worst:>16.3e}")
    print(f"overall worst rel diff: {worst_rel:.3e} at config {worst_case}")
    print(f"bijection failures: {bij_failures}")
    ok = worst_rel <= 1e-9 and bij_failures == 0
    print("RESULT:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
