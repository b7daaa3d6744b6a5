"""Stress the raising/lowering laws on random tableaux paths.

Checks weight shifts, partial inverses and nullity thresholds for every
simple root on each sampled path and reports throughput.
"""

import argparse
import random
import time

from twistcube.paths import lowering, p_max, q_min, raising
from twistcube.rootsys import builtin_cartan
from twistcube.sampling import random_cube, random_path


def check(cm, p, j):
    alpha = cm.simple_root(j)
    cur = p
    for _ in range(p_max(p, j)):
        nxt = lowering(cm, cur, j)
        if nxt is None or nxt.weight() != cur.weight() - alpha or raising(cm, nxt, j) != cur:
            return False
        cur = nxt
    if lowering(cm, cur, j) is not None:
        return False
    cur = p
    for _ in range(-q_min(p, j)):
        nxt = raising(cm, cur, j)
        if nxt is None or nxt.weight() != cur.weight() + alpha or lowering(cm, nxt, j) != cur:
            return False
        cur = nxt
    return raising(cm, cur, j) is None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--paths", type=int, default=20000)
    ap.add_argument("--types", default="A1,A2,A3,B2,G2")
    ap.add_argument("--max-len", type=int, default=5)
    ap.add_argument("--max-mult", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cartans = [builtin_cartan(t) for t in args.types.split(",")]
    failures = 0
    longest = 0
    start = time.perf_counter()
    for _ in range(args.paths):
        cm = rng.choice(cartans)
        p = random_path(rng, random_cube(rng, cm, args.max_len, args.max_mult))
        longest = max(longest, len(p))
        for j in range(1, cm.rank + 1):
            if not check(cm, p, j):
                failures += 1
                print("failure:", cm.name, j, p)
    elapsed = time.perf_counter() - start
    print(f"paths {args.paths}  failures {failures}  max breakpoints {longest}  "
          f"{args.paths / elapsed:.0f} paths/s")


if __name__ == "__main__":
    main()
