"""Floor/ceiling decomposition on random facet-unimodular pairs.

Normals are axis and difference vectors (optionally column-flipped), so every
pair meets the two-entry hypotheses. Reports, per dimension, how many lattice
points were split by rounding and how many needed the verified fallback.

    python scripts/rounding_survey.py --pairs 300 --seed 7
"""

import argparse
import random
import time
from collections import Counter

from odakit.build import random_facet_unimodular_pair
from odakit.idp import decompose_all


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    stats: dict[int, Counter] = {}
    t0 = time.perf_counter()
    for _ in range(args.pairs):
        p, q = random_facet_unimodular_pair(rng)
        c = stats.setdefault(p.dim, Counter())
        c["pairs"] += 1
        for d in decompose_all(p, q):
            c[d.method] += 1
    print(f"{'dim':>3} {'pairs':>6} {'rounding':>9} {'fallback':>9}")
    for dim in sorted(stats):
        c = stats[dim]
        print(f"{dim:>3} {c['pairs']:>6} {c['rounding']:>9} {c['fallback']:>9}")
    print(f"[{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    main()
