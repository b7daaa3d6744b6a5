"""Exhaustive sweep over words and multiplicities.

For each instance records (P), (P'), bijectivity and the character identity,
then prints per-type totals.  Optionally writes one JSON line per instance.
"""

import argparse
import itertools
import json
import time
from collections import Counter

from twistcube.characters import generalized_demazure_character, path_character
from twistcube.cube import TwistedCube
from twistcube.rootsys import builtin_cartan
from twistcube.tableaux import condition_P_prime, enumerate_tableaux, verify_bijection


def instances(types, max_len, max_mult):
    for name in types:
        cm = builtin_cartan(name)
        for n in range(1, max_len + 1):
            for word in itertools.product(range(1, cm.rank + 1), repeat=n):
                for mults in itertools.product(range(max_mult + 1), repeat=n):
                    yield name, TwistedCube(cm, word, mults)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--types", default="A2,A3,B2,G2")
    ap.add_argument("--max-len", type=int, default=4)
    ap.add_argument("--max-mult", type=int, default=2)
    ap.add_argument("--jsonl", help="write per-instance records here")
    args = ap.parse_args()

    stats: dict[str, Counter] = {}
    sink = open(args.jsonl, "w") if args.jsonl else None
    start = time.perf_counter()
    for name, cube in instances(args.types.split(","), args.max_len, args.max_mult):
        P = cube.condition_P()
        Pp = condition_P_prime(cube)
        ts = enumerate_tableaux(cube)
        row = {
            "type": name,
            "word": cube.word,
            "mult": cube.mults,
            "reduced": cube.cartan.is_reduced(cube.word),
            "P": P,
            "P_prime": Pp,
            "lattice": len(cube.lattice_points()),
            "tableaux": len(ts),
            "bijective": verify_bijection(cube).bijective if P else None,
            "character_identity": path_character(ts) == generalized_demazure_character(cube),
        }
        c = stats.setdefault(name, Counter())
        c["instances"] += 1
        c["P"] += P
        c["P_prime"] += Pp
        c["P_prime_not_P"] += Pp and not P
        c["P_not_P_prime"] += P and not Pp
        c["bijection_failures"] += P and not row["bijective"]
        c["character_failures"] += not row["character_identity"]
        c["count_equal_without_P"] += (not P) and row["lattice"] == row["tableaux"]
        if sink:
            sink.write(json.dumps(row) + "\n")
    if sink:
        sink.close()

    keys = ["instances", "P", "P_prime", "P_prime_not_P", "P_not_P_prime",
            "bijection_failures", "character_failures", "count_equal_without_P"]
    print("type " + " ".join(f"{k:>22}" for k in keys))
    for name, c in stats.items():
        print(f"{name:4} " + " ".join(f"{c[k]:>22}" for k in keys))
    print(f"elapsed {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
