"""Full report on the 4D PolyDB pair F.4D.0114 / F.4D.0038.

    python scripts/polydb_pair.py [--json]
"""

import argparse
import sys
import time

from odakit.build import catalog
from odakit.classify import classify
from odakit.formats import emit_report
from odakit.idp import idp_pair_check, prepare_rounding
from odakit.tumat import facet_normal_matrix, is_almost_co_unimodular_pair, is_totally_unimodular


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    p, q = catalog("F.4D.0114"), catalog("F.4D.0038")
    t0 = time.perf_counter()
    rep = idp_pair_check(p, q)
    stacked = facet_normal_matrix(p).matrix + facet_normal_matrix(q).matrix
    heavy = [r for r in stacked if sum(1 for x in r if x) > 2]
    try:
        prepare_rounding(p, q)
        rounding = "available"
    except ValueError as exc:
        rounding = str(exc)
    report = {
        "P": classify(p),
        "Q": classify(q),
        "count_sumset": rep.count_sumset,
        "count_sum_points": rep.count_sum_points,
        "gaps": rep.gaps,
        "stacked_tu": is_totally_unimodular(stacked),
        "heavy_rows": heavy,
        "heavy_rows_tu": is_totally_unimodular(heavy),
        "almost_co_unimodular": is_almost_co_unimodular_pair(p, q).verdict,
        "rounding": rounding,
    }
    if args.json:
        sys.stdout.buffer.write(emit_report(report, "json"))
        return
    print(f"P: {len(p.vertices)} vertices, {len(p.inequalities)} facets")
    print(f"Q: {len(q.vertices)} vertices, {len(q.inequalities)} facets")
    print(f"|sumset| = {rep.count_sumset}, |(P+Q) ∩ Z^4| = {rep.count_sum_points}, gaps = {len(rep.gaps)}")
    print("first gaps:", rep.gaps[:5])
    w = report["heavy_rows_tu"].witness
    print("rows with >2 nonzeros:", heavy)
    if w:
        print(f"non-TU minor on rows {[heavy[i] for i in w.rows]}, columns {w.cols}, det {w.det}")
    print("almost co-unimodular:", report["almost_co_unimodular"])
    print("rounding decomposition:", rounding)
    print(f"[{time.perf_counter() - t0:.2f}s]")


if __name__ == "__main__":
    main()
