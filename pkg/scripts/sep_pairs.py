"""Check every pair of duals of symmetric edge polytopes on a fixed vertex count.

    python scripts/sep_pairs.py --vertices 4
    python scripts/sep_pairs.py --vertices 5 --sample 200 --seed 1
"""

import argparse
import itertools
import random
import time

from odakit.build import connected_graphs, sep, sep_dual
from odakit.classify import is_reflexive
from odakit.idp import idp_pair_check
from odakit.tumat import is_facet_unimodular


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--vertices", type=int, default=4)
    ap.add_argument("--sample", type=int, default=0, help="random pairs instead of all pairs")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    graphs = list(connected_graphs(args.vertices))
    duals = [sep_dual(g) for g in graphs]
    refl = sum(is_reflexive(sep(g)) for g in graphs)
    fu = sum(is_facet_unimodular(d) for d in duals)
    print(f"{len(graphs)} connected graphs; reflexive SEP {refl}; facet-unimodular duals {fu}")

    if args.sample:
        rng = random.Random(args.seed)
        pairs = [tuple(rng.sample(range(len(graphs)), 2)) for _ in range(args.sample)]
    else:
        pairs = list(itertools.combinations_with_replacement(range(len(graphs)), 2))
    bad = []
    largest = 0
    for a, b in pairs:
        rep = idp_pair_check(duals[a], duals[b])
        largest = max(largest, rep.count_sum_points)
        if not rep.is_idp_pair:
            bad.append((graphs[a].edges, graphs[b].edges, rep.gaps[:3]))
    print(f"{len(pairs)} pairs, {len(bad)} not IDP, largest |(P+Q) ∩ Z^n| = {largest}")
    for row in bad:
        print("  ", row)
    print(f"[{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    main()
