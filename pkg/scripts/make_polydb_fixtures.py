"""Regenerate the checked-in PolyDB records under src/odakit/data/.

The records are rebuilt from the facet normals below with every offset set to
1 in polymake's homogeneous convention, i.e. each row is [1, a] and the
polytopes are reflexive. That choice reproduces the known lattice-point counts
of the pair (checked in the test suite). Vertices are recomputed exactly from
the facet rows and written alongside them; loading a record cross-checks the
two. ``odakit --fetch-polydb <id>`` compares against a live database copy.
"""

import json
from pathlib import Path

from odakit.formats import parse_polydb_record, polydb_record
from odakit.geometry import Polytope

NORMALS = {
    "F.4D.0114": [(0, 0, 0, -1), (-1, 0, 0, 0), (1, 1, 0, 1), (0, -1, 0, 0), (0, 0, -1, 0), (0, -1, 1, 0)],
    "F.4D.0038": [(-1, 1, 0, 0), (0, 0, 0, -1), (1, -1, -1, 1), (0, 0, -1, 0), (-1, 0, 0, 0),
                  (0, -1, 0, 0), (0, 1, 1, 0), (1, -1, 0, 1)],
}

OUT = Path(__file__).resolve().parents[1] / "src" / "odakit" / "data"


def _dump(record: dict) -> str:
    parts = [f'  "_id": {json.dumps(record["_id"])}']
    for key in ("FACETS", "VERTICES"):
        rows = ",\n".join(f"    {json.dumps(r)}" for r in record[key])
        parts.append(f'  "{key}": [\n{rows}\n  ]')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def main() -> None:
    for ident, normals in NORMALS.items():
        p = Polytope.from_inequalities([(a, -1) for a in normals], ident)
        assert len(p.inequalities) == len(normals), "redundant facet row"
        assert p.is_lattice
        record = polydb_record(p, ident)
        assert parse_polydb_record(record).same_as(p)
        (OUT / f"{ident}.json").write_text(_dump(record))
        print(ident, len(p.vertices), "vertices", len(p.inequalities), "facets")


if __name__ == "__main__":
    main()
