#!/usr/bin/env python3
"""Time congruence reduction against the char-poly route on random signed graphs."""

import argparse
import random
import time

from siginertia.core import SignedGraph
from siginertia.inertia import adjacency_matrix, char_poly, inertia_by_congruence, inertia_from_char_poly


def random_graph(rng, n, density):
    edges = [(i, j, rng.choice((1, -1))) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return SignedGraph.from_edges(n, edges)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="8,16,32,48")
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    print(f"{'n':>4} {'congruence_ms':>14} {'charpoly_ms':>12}  agree")
    for n in map(int, args.sizes.split(",")):
        mats = [adjacency_matrix(random_graph(rng, n, args.density)) for _ in range(args.samples)]
        t0 = time.perf_counter()
        a = [inertia_by_congruence(m) for m in mats]
        t1 = time.perf_counter()
        b = [inertia_from_char_poly(char_poly(m)) for m in mats]
        t2 = time.perf_counter()
        per = 1000 / args.samples
        print(f"{n:>4} {(t1 - t0) * per:>14.3f} {(t2 - t1) * per:>12.3f}  {a == b}")


if __name__ == "__main__":
    main()
