"""Constructions: symmetric edge polytopes, their duals, wedges, and the named catalog."""

from __future__ import annotations

import itertools
import json
import random
import re
import warnings
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterator, Sequence

from .geometry import Polytope, affine_dimension, drop_last_coordinate, dual
from .tumat import is_facet_unimodular


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n_vertices."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.n_vertices and 1 <= j <= self.n_vertices):
                raise ValueError(f"edge {(i, j)} outside 1..{self.n_vertices}")
            norm.append((min(i, j), max(i, j)))
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate edge")
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for i, j in self.edges:
                for a, b in ((i, j), (j, i)):
                    if a == u and b not in seen:
                        seen.add(b)
                        stack.append(b)
        return len(seen) == self.n_vertices


def connected_graphs(n_vertices: int) -> Iterator[Graph]:
    """All connected labelled graphs on 1..n_vertices."""
    pairs = list(itertools.combinations(range(1, n_vertices + 1), 2))
    for mask in range(1, 1 << len(pairs)):
        g = Graph(n_vertices, tuple(e for k, e in enumerate(pairs) if mask >> k & 1))
        if g.is_connected():
            yield g


def sep(g: Graph) -> Polytope:
    """Symmetric edge polytope conv(±(e_i - e_j)), last coordinate dropped."""
    if not g.edges:
        raise ValueError("graph has no edges")
    n1 = g.n_vertices
    pts = []
    for i, j in g.edges:
        v = [0] * n1
        v[i - 1], v[j - 1] = 1, -1
        pts.append(v)
        pts.append([-x for x in v])
    proj = drop_last_coordinate(pts)
    if not g.is_connected():
        warnings.warn("disconnected graph: symmetric edge polytope is not full-dimensional")
    return Polytope.from_vertices(proj, f"SEP{g.edges}")


def sep_dual(g: Graph) -> Polytope:
    """Dual of the symmetric edge polytope; checked to be a facet-unimodular lattice polytope."""
    s = sep(g)
    d = dual(s)
    if not d.is_lattice:
        raise ValueError("dual of the symmetric edge polytope is not a lattice polytope")
    if not is_facet_unimodular(d):
        raise ValueError("dual of the symmetric edge polytope is not facet unimodular")
    return Polytope(d.vertices, d.inequalities, f"SEP*{g.edges}")


def wedge(p: Polytope, facet: int) -> Polytope:
    """Wedge over a facet: P × [-1, ∞) cut by f(x) + t <= b - 1.

    The facet's stored inequality <a, x> >= r is read as f(x) = -<a, x> <= b = -r,
    so the cut is <a, x> - t >= r + 1.
    """
    p.require_full_dimensional()
    if not 0 <= facet < len(p.inequalities):
        raise ValueError(f"no facet with index {facet}")
    f = p.inequalities[facet]
    ineqs = [(list(g.normal) + [0], g.rhs) for g in p.inequalities]
    ineqs.append(([0] * p.dim + [1], -1))
    ineqs.append((list(f.normal) + [-1], f.rhs + 1))
    w = Polytope.from_inequalities(ineqs, f"wedge({p.name},{facet})" if p.name else "")
    assert affine_dimension(w.vertices) == p.dim + 1
    return w


def random_two_entry_polytope(n: int, rng: random.Random, signs=None) -> Polytope | None:
    """Random bounded polytope whose facet normals are axis or difference vectors.

    Such normal matrices are totally unimodular, so integer right-hand sides
    give lattice polytopes that are facet unimodular. ``signs`` flips columns,
    turning some differences into sums. Returns None for empty or flat draws.
    """
    signs = signs or [1] * n
    rows = []
    for i in range(n):
        lo = rng.randint(-1, 0)
        e = [int(i == j) for j in range(n)]
        rows.append((e, lo))
        rows.append(([-x for x in e], -(lo + rng.randint(1, 2))))
    for i, j in itertools.permutations(range(n), 2):
        if rng.random() < 0.3:
            d = [0] * n
            d[i], d[j] = 1, -1
            rows.append((d, rng.randint(-2, 0)))
    rows = [([a * s for a, s in zip(r, signs)], b) for r, b in rows]
    try:
        p = Polytope.from_inequalities(rows)
    except ValueError:
        return None
    return p if p.is_full_dimensional else None


def random_facet_unimodular_pair(rng: random.Random, dims=(2, 3, 4)) -> tuple[Polytope, Polytope]:
    """Two such polytopes in a random dimension, sharing one column-sign pattern."""
    n = rng.choice(dims)
    signs = [rng.choice((-1, 1)) for _ in range(n)]
    while True:
        p = random_two_entry_polytope(n, rng, signs)
        q = random_two_entry_polytope(n, rng, signs)
        if p is not None and q is not None:
            return p, q


def cube(n: int) -> Polytope:
    return Polytope.from_vertices(itertools.product((-1, 1), repeat=n), f"cube({n})")


def unit_cube(n: int) -> Polytope:
    return Polytope.from_vertices(itertools.product((0, 1), repeat=n), f"unit_cube({n})")


def cross(n: int) -> Polytope:
    pts = []
    for i in range(n):
        for s in (1, -1):
            v = [0] * n
            v[i] = s
            pts.append(v)
    return Polytope.from_vertices(pts, f"cross({n})")


def simplex(n: int) -> Polytope:
    pts = [[0] * n] + [[int(i == j) for j in range(n)] for i in range(n)]
    return Polytope.from_vertices(pts, f"simplex({n})")


def _named(points: Sequence[Sequence[int]], name: str) -> Polytope:
    return Polytope.from_vertices(points, name)


POLYDB_IDS = ("F.4D.0114", "F.4D.0038")

_FIXED = {
    "oda2d_P": lambda: _named([(0, 0), (0, 1), (1, 0)], "oda2d_P"),
    "oda2d_Q": lambda: _named([(0, 0), (2, 1), (3, 1)], "oda2d_Q"),
    "nonidp3d": lambda: _named([(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)], "nonidp3d"),
    "hexagon": lambda: _named([(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)], "hexagon"),
    "hexagon_plus": lambda: _named([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)], "hexagon_plus"),
}

_FAMILIES = {"cube": cube, "unit_cube": unit_cube, "cross": cross, "simplex": simplex}


@lru_cache(maxsize=None)
def polydb_fixture(ident: str) -> dict:
    """Checked-in PolyDB record for one of :data:`POLYDB_IDS`."""
    if ident not in POLYDB_IDS:
        raise KeyError(ident)
    text = resources.files("odakit.data").joinpath(f"{ident}.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def catalog(name: str) -> Polytope:
    """Named polytope: fixed fixtures, PolyDB ids, or families such as ``cube(3)``."""
    if name in _FIXED:
        return _FIXED[name]()
    if name in POLYDB_IDS:
        from .formats import parse_polydb_record

        return parse_polydb_record(polydb_fixture(name))
    m = re.fullmatch(r"(\w+)\((\d+)\)", name)
    if m and m.group(1) in _FAMILIES and int(m.group(2)) >= 1:
        return _FAMILIES[m.group(1)](int(m.group(2)))
    raise KeyError(f"unknown catalog name {name!r}")


def catalog_names() -> list[str]:
    """Every fixed name plus small members of each family."""
    fam = [f"{f}({n})" for f in ("cube", "unit_cube", "cross", "simplex") for n in (1, 2, 3)]
    return list(_FIXED) + list(POLYDB_IDS) + fam
