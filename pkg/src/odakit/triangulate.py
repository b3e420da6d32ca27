"""Placing triangulations, boundary and centric triangulations, and checks."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .classify import is_reflexive
from .exact import det, rank, solve
from .geometry import Inequality, Point, Polytope, _hrep_vertices, as_point, vrep_to_hrep, volume_of_simplex
from .lattice import lattice_points


@dataclass(frozen=True)
class Triangulation:
    points: tuple[Point, ...]
    cells: tuple[tuple[int, ...], ...]

    @property
    def cell_dim(self) -> int:
        return len(self.cells[0]) - 1

    def cell_points(self, cell: Sequence[int]) -> list[Point]:
        return [self.points[i] for i in cell]


def _barycentric(p: Point, verts: Sequence[Point]) -> list[Fraction]:
    base = verts[0]
    cols = [[Fraction(a) - b for a, b in zip(v, base)] for v in verts[1:]]
    mu = solve(cols, [Fraction(a) - b for a, b in zip(p, base)])
    if mu is None:
        raise ValueError("point outside the affine span of the cell")
    return [1 - sum(mu)] + mu


def placing_triangulation(points: Sequence[Sequence], order: Sequence[int] | None = None,
                          dim: int | None = None) -> Triangulation:
    """Triangulate conv(points) by inserting points one at a time.

    A point outside the current affine span is coned over every cell; a point
    inside the span is joined to the boundary faces it sees. The default order
    is lexicographic, under which every inserted point is a vertex of the new
    hull, so all points are used.
    """
    pts = tuple(as_point(p) for p in points)
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    if order is None:
        order = sorted(range(len(pts)), key=lambda i: pts[i])
    cells: list[tuple[int, ...]] = []
    base = None
    span: list[list[Fraction]] = []
    for i in order:
        p = pts[i]
        if base is None:
            base = p
            cells = [(i,)]
            continue
        diff = [Fraction(a) - b for a, b in zip(p, base)]
        if rank(span + [diff]) > len(span):
            span.append(diff)
            cells = [tuple(sorted(c + (i,))) for c in cells]
            continue
        faces = Counter()
        owner = {}
        for c in cells:
            for j in c:
                f = tuple(k for k in c if k != j)
                faces[f] += 1
                owner[f] = (c, j)
        new = []
        for f, count in faces.items():
            if count != 1:
                continue
            c, j = owner[f]
            lam = _barycentric(p, [pts[k] for k in c])
            if lam[c.index(j)] < 0:
                new.append(tuple(sorted(f + (i,))))
        cells.extend(new)
    if dim is not None and len(span) < dim:
        raise ValueError("degenerate input: points do not span the target dimension")
    return Triangulation(pts, tuple(sorted(cells)))


def boundary_triangulation(p: Polytope) -> Triangulation:
    """Placing triangulations of all facets under one global lexicographic order."""
    if not is_reflexive(p):
        raise ValueError("boundary triangulation needs a reflexive polytope")
    origin = tuple([0] * p.dim)
    pts = [x for x in lattice_points(p) if x != origin]
    index = {x: k for k, x in enumerate(pts)}
    cells = []
    for f in p.inequalities:
        on = sorted(index[x] for x in pts if f.value(x) == 0)
        local = placing_triangulation([pts[k] for k in on], dim=p.dim - 1)
        cells.extend(tuple(on[k] for k in c) for c in local.cells)
    ridges = Counter(
        tuple(k for k in c if k != j) for c in cells for j in c
    )
    if any(v != 2 for v in ridges.values()):
        raise ValueError("facet triangulations disagree on shared faces")
    return Triangulation(tuple(pts), tuple(sorted(cells)))


def centric_triangulation(p: Polytope, boundary: Triangulation | None = None) -> Triangulation:
    """Cone every boundary cell from the origin."""
    if not is_reflexive(p):
        raise ValueError("centric triangulation needs a reflexive polytope")
    boundary = boundary or boundary_triangulation(p)
    origin = tuple([0] * p.dim)
    pts = boundary.points + (origin,)
    o = len(pts) - 1
    return Triangulation(pts, tuple((o,) + c for c in boundary.cells))


def is_unimodular_triangulation(t: Triangulation) -> bool:
    """Each full-dimensional cell has normalized volume one."""
    for cell in t.cells:
        verts = t.cell_points(cell)
        if len(verts) != len(verts[0]) + 1:
            raise ValueError("cells are not full-dimensional")
        edges = [[a - b for a, b in zip(v, verts[0])] for v in verts[1:]]
        if abs(det(edges)) != 1:
            return False
    return True


def volume(p: Polytope) -> Fraction:
    """Exact volume via a placing triangulation of the vertices."""
    t = placing_triangulation(p.vertices, dim=p.dim)
    return sum((volume_of_simplex(t.cell_points(c)) for c in t.cells), Fraction(0))


def _proper_pair(s1: list[Point], h1: list[Inequality], s2: list[Point], h2: list[Inequality]) -> bool:
    """Whether conv(s1) ∩ conv(s2) is the common face conv(s1 ∩ s2)."""
    common = set(s1) & set(s2)
    for ha, sb in ((h1, s2), (h2, s1)):
        for f in ha:
            vals = [f.value(v) for v in sb]
            if all(v <= 0 for v in vals):
                on_b = {v for v, val in zip(sb, vals) if val == 0}
                sa = s1 if sb is s2 else s2
                on_a = {v for v in sa if f.value(v) == 0}
                if on_b <= on_a or on_a <= on_b:
                    return True
    try:
        inter = _hrep_vertices(list(h1) + list(h2), len(s1[0]))
    except ValueError:
        return not common
    return all(v in common for v in inter)


@dataclass
class TriangulationCheck:
    independent: bool
    volume_identity: bool
    face_to_face: bool
    cells_volume: Fraction
    polytope_volume: Fraction

    def __bool__(self) -> bool:
        return self.independent and self.volume_identity and self.face_to_face


def verify_triangulation(p: Polytope, t: Triangulation) -> TriangulationCheck:
    """Affine independence, exact volume identity, and pairwise proper intersection."""
    n = p.dim
    cells = [t.cell_points(c) for c in t.cells]
    independent = all(
        len(c) == n + 1 and rank([[Fraction(a) - b for a, b in zip(v, c[0])] for v in c[1:]]) == n
        for c in cells
    )
    total = sum((volume_of_simplex(c) for c in cells), Fraction(0)) if independent else Fraction(0)
    vol = volume(p)
    proper = True
    if independent:
        hreps = [vrep_to_hrep(c) for c in cells]
        for i, j in itertools.combinations(range(len(cells)), 2):
            if not _proper_pair(cells[i], hreps[i], cells[j], hreps[j]):
                proper = False
                break
    return TriangulationCheck(independent, independent and total == vol, independent and proper, total, vol)
