"""Exact polytopes: hull and facet conversion, duality, fans.

Inequalities use the inward convention ``<a, x> >= b`` with ``a`` a primitive
integer vector, so a lattice polytope is reflexive exactly when every ``b`` is
-1. All conversions run through one routine, :func:`extreme_rays`, a
double-description enumeration of the extreme rays of ``{y : A y >= 0}`` in
integer arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, lcm
from typing import Iterable, NamedTuple, Sequence

from .exact import (
    Rational,
    adjugate,
    det,
    independent_rows,
    dot,
    integral_direction,
    normalize,
    primitive,
    rank,
    row_echelon,
)

Point = tuple[Rational, ...]


class Inequality(NamedTuple):
    """``<normal, x> >= rhs`` with ``normal`` primitive."""

    normal: tuple[int, ...]
    rhs: Rational

    def value(self, x: Sequence[Rational]) -> Rational:
        return dot(self.normal, x) - self.rhs


def as_point(x: Iterable) -> Point:
    return tuple(normalize(Fraction(c)) for c in x)


def make_inequality(normal: Sequence[Rational], rhs: Rational) -> Inequality:
    """Scale ``<normal, x> >= rhs`` to a primitive integer normal."""
    den = lcm(*(Fraction(c).denominator for c in normal))
    ints = [int(Fraction(c) * den) for c in normal]
    a, g = primitive(ints)
    return Inequality(a, normalize(Fraction(rhs) * den / g))


def _scaled_row(values: Sequence[Rational]) -> tuple[int, ...]:
    den = lcm(*(Fraction(c).denominator for c in values))
    return tuple(int(Fraction(c) * den) for c in values)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def extreme_rays(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{y : <row, y> >= 0 for all rows}``.

    Rays come back as primitive integer vectors. Raises ``ValueError`` when the
    rows do not have full column rank (the cone then has a lineality space).
    """
    rows = [tuple(int(x) for x in r) for r in rows if any(r)]
    if not rows:
        raise ValueError("cone has a lineality space")
    n = len(rows[0])
    basis = independent_rows(rows)
    if len(basis) < n:
        raise ValueError("cone has a lineality space")
    sub = [list(rows[i]) for i in basis]
    adj = adjugate(sub)
    sign = 1 if det(sub) > 0 else -1
    rays: list[tuple[int, ...]] = []
    tight: list[int] = []
    for j in range(n):
        # column j of the adjugate is the ray tight on every basis row but row j
        rays.append(primitive([sign * adj[i][j] for i in range(n)])[0])
        tight.append(sum(1 << basis[k] for k in range(n) if k != j))

    need = n - 2
    for idx, row in enumerate(rows):
        if idx in basis:
            continue
        vals = [dot(row, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        bit = 1 << idx
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zero]
        new_tight = [tight[i] for i in pos] + [tight[i] | bit for i in zero]
        if neg:
            for p in pos:
                for q in neg:
                    common = tight[p] & tight[q]
                    if _popcount(common) < need:
                        continue
                    if any(k != p and k != q and tight[k] & common == common
                           for k in range(len(rays))):
                        continue
                    vp, vq = vals[p], -vals[q]
                    combo = [vq * a + vp * b for a, b in zip(rays[p], rays[q])]
                    new_rays.append(primitive(combo)[0])
                    new_tight.append(common | bit)
        rays, tight = new_rays, new_tight
    return rays


def affine_dimension(points: Sequence[Point]) -> int:
    if not points:
        return -1
    base = points[0]
    return rank([[Fraction(a) - b for a, b in zip(p, base)] for p in points[1:]]) if len(points) > 1 else 0


def _affine_chart(points: Sequence[Point]) -> tuple[list[int], int]:
    """Coordinates whose projection is injective on the affine hull."""
    base = points[0]
    diffs = [[Fraction(a) - b for a, b in zip(p, base)] for p in points[1:]]
    _, piv = row_echelon(diffs) if diffs else ([], [])
    return piv, len(piv)


def vrep_to_hrep(points: Sequence[Sequence[Rational]]) -> list[Inequality]:
    """Facet inequalities of the hull of full-dimensional points, sorted."""
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        raise ValueError("empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points of mixed dimension")
    if affine_dimension(pts) < n:
        raise ValueError("points are not full-dimensional")
    rows = [_scaled_row(list(p) + [-1]) for p in pts]
    out = []
    for ray in extreme_rays(rows):
        a, b = ray[:n], ray[n]
        if not any(a):
            continue
        out.append(make_inequality(a, b))
    return sorted(set(out))


def _hrep_vertices(inequalities: Sequence[Inequality], dim: int) -> list[Point]:
    """Vertices of a bounded inequality system; need not be full-dimensional."""
    rows = [_scaled_row(list(ineq.normal) + [-Fraction(ineq.rhs)]) for ineq in inequalities]
    rows.append(tuple([0] * dim + [1]))
    try:
        rays = extreme_rays(rows)
    except ValueError:
        raise ValueError("not a polytope: inequality system is unbounded") from None
    verts = []
    for ray in rays:
        t = ray[dim]
        if t == 0:
            raise ValueError("not a polytope: inequality system is unbounded")
        verts.append(as_point(Fraction(c, t) for c in ray[:dim]))
    if not verts:
        raise ValueError("empty: inequality system is infeasible")
    return sorted(set(verts))


def hrep_to_vrep(inequalities: Sequence[Inequality]) -> list[Point]:
    """Vertices of the polytope ``{x : <a, x> >= b}``, sorted."""
    if not inequalities:
        raise ValueError("not a polytope: no inequalities")
    ineqs = [make_inequality(a, b) for a, b in inequalities]
    return _hrep_vertices(ineqs, len(ineqs[0].normal))


def convex_hull(points: Sequence[Sequence[Rational]]) -> list[Point]:
    """Irredundant vertex set of conv(points), in any affine dimension."""
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        raise ValueError("empty point set")
    if any(len(p) != len(pts[0]) for p in pts):
        raise ValueError("points of mixed dimension")
    chart, d = _affine_chart(pts)
    if d == 0:
        return pts[:1]
    proj = [tuple(p[c] for c in chart) for p in pts]
    facets = vrep_to_hrep(proj)
    keep = []
    for p, q in zip(pts, proj):
        normals = [f.normal for f in facets if f.value(q) == 0]
        if rank(normals) == d:
            keep.append(p)
    return keep


@dataclass(frozen=True, eq=False)
class Polytope:
    """A polytope holding both representations and facet-vertex incidence.

    Built via :meth:`from_vertices` or :meth:`from_inequalities`; both
    representations are completed eagerly so instances are immutable. Lower
    dimensional polytopes carry vertices only (``inequalities`` is empty).
    """

    vertices: tuple[Point, ...]
    inequalities: tuple[Inequality, ...]
    name: str = field(default="", compare=False)

    @classmethod
    def from_vertices(cls, points: Iterable[Sequence[Rational]], name: str = "") -> "Polytope":
        verts = convex_hull(list(points))
        n = len(verts[0])
        if affine_dimension(verts) < n:
            return cls(tuple(verts), (), name)
        return cls(tuple(verts), tuple(vrep_to_hrep(verts)), name)

    @classmethod
    def from_inequalities(cls, inequalities: Iterable[Sequence], name: str = "") -> "Polytope":
        given = [make_inequality(a, b) for a, b in inequalities]
        verts = hrep_to_vrep(given)
        n = len(verts[0])
        if affine_dimension(verts) < n:
            return cls(tuple(verts), (), name)
        facets = set(vrep_to_hrep(verts))
        order = []
        for ineq in given:
            if ineq in facets and ineq not in order:
                order.append(ineq)
        return cls(tuple(verts), tuple(order), name)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @property
    def is_full_dimensional(self) -> bool:
        return bool(self.inequalities)

    @cached_property
    def incidence(self) -> tuple[frozenset[int], ...]:
        """For each facet, the indices of the vertices lying on it."""
        return tuple(
            frozenset(i for i, v in enumerate(self.vertices) if f.value(v) == 0)
            for f in self.inequalities
        )

    @property
    def is_lattice(self) -> bool:
        return all(isinstance(c, int) for v in self.vertices for c in v)

    def require_full_dimensional(self) -> None:
        if not self.is_full_dimensional:
            raise ValueError("polytope is not full-dimensional")

    def facet_vertices(self, i: int) -> list[Point]:
        return [self.vertices[j] for j in sorted(self.incidence[i])]

    def same_as(self, other: "Polytope") -> bool:
        return set(self.vertices) == set(other.vertices)

    def translate(self, shift: Sequence[Rational]) -> "Polytope":
        return Polytope.from_vertices([[a + b for a, b in zip(v, shift)] for v in self.vertices])

    def linear_image(self, matrix: Sequence[Sequence[int]]) -> "Polytope":
        """Image under ``x -> matrix @ x``."""
        return Polytope.from_vertices([[dot(row, v) for row in matrix] for v in self.vertices])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.vertices == other.vertices and self.inequalities == other.inequalities

    def __hash__(self) -> int:
        return hash((self.vertices, self.inequalities))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Polytope{label} dim={self.dim} vertices={len(self.vertices)} facets={len(self.inequalities)}>"


def contains(p: Polytope, x: Sequence[Rational], mode: str = "closed") -> bool:
    """Membership test: ``closed``, ``strict`` (interior) or ``boundary``."""
    if len(x) != p.dim:
        raise ValueError("dimension mismatch")
    p.require_full_dimensional()
    vals = [f.value(x) for f in p.inequalities]
    closed = all(v >= 0 for v in vals)
    if mode == "closed":
        return closed
    if mode == "strict":
        return all(v > 0 for v in vals)
    if mode == "boundary":
        return closed and any(v == 0 for v in vals)
    raise ValueError(f"unknown containment mode {mode!r}")


def dual(p: Polytope) -> Polytope:
    """Polar polytope {u : <u, v> >= -1 for all v in P}."""
    p.require_full_dimensional()
    if not all(f.rhs < 0 for f in p.inequalities):
        raise ValueError("dual undefined: origin is not interior")
    return Polytope.from_vertices([[Fraction(-a) / f.rhs for a in f.normal] for f in p.inequalities])


def adjacent_vertices(p: Polytope, i: int) -> list[int]:
    """Indices of vertices joined to vertex ``i`` by an edge."""
    p.require_full_dimensional()
    inc = [frozenset(k for k, s in enumerate(p.incidence) if j in s) for j in range(len(p.vertices))]
    out = []
    for j in range(len(p.vertices)):
        if j == i:
            continue
        common = inc[i] & inc[j]
        if rank([p.inequalities[k].normal for k in common]) != p.dim - 1:
            continue
        if any(k not in (i, j) and common <= inc[k] for k in range(len(p.vertices))):
            continue
        out.append(j)
    return out


def edges_at_vertex(p: Polytope, v: Sequence[Rational]) -> list[tuple[int, ...]]:
    """Primitive integer edge directions leaving vertex ``v``."""
    v = as_point(v)
    try:
        i = p.vertices.index(v)
    except ValueError:
        raise ValueError(f"{v} is not a vertex") from None
    return sorted(
        integral_direction([Fraction(a) - b for a, b in zip(p.vertices[j], v)])
        for j in adjacent_vertices(p, i)
    )


def drop_last_coordinate(points: Iterable[Sequence[Rational]]) -> list[Point]:
    """Project points lying in a hyperplane sum(x) = c by forgetting the last entry."""
    return [as_point(p[:-1]) for p in points]


@dataclass(frozen=True)
class Cone:
    """Cone with apex at the origin spanned by primitive integer generators."""

    generators: tuple[tuple[int, ...], ...]

    @cached_property
    def inequalities(self) -> tuple[tuple[int, ...], ...]:
        """Facet normals ``a`` with ``<a, x> >= 0``; requires a full-dimensional cone."""
        n = len(self.generators[0])
        if rank(self.generators) < n:
            raise ValueError("cone is not full-dimensional")
        return tuple(sorted(extreme_rays(self.generators)))

    def contains(self, x: Sequence[Rational]) -> bool:
        return all(dot(a, x) >= 0 for a in self.inequalities)

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)


@dataclass(frozen=True)
class Fan:
    cones: tuple[Cone, ...]

    def cones_containing(self, x: Sequence[Rational]) -> list[int]:
        return [i for i, c in enumerate(self.cones) if c.contains(x)]


def face_fan(p: Polytope) -> Fan:
    """One maximal cone per facet, spanned by the facet's vertices."""
    p.require_full_dimensional()
    if not all(f.rhs < 0 for f in p.inequalities):
        raise ValueError("face fan needs the origin in the interior")
    cones = []
    for i in range(len(p.inequalities)):
        gens = sorted(set(integral_direction(v) for v in p.facet_vertices(i)))
        cones.append(Cone(tuple(gens)))
    return Fan(tuple(cones))


def normal_fan(p: Polytope) -> Fan:
    """Face fan of the dual of P recentred at its vertex barycentre."""
    p.require_full_dimensional()
    m = len(p.vertices)
    centre = [sum(Fraction(v[k]) for v in p.vertices) / m for k in range(p.dim)]
    return face_fan(dual(p.translate([-c for c in centre])))


def fan_refines(fine: Fan, coarse: Fan) -> bool:
    """True iff every maximal cone of ``fine`` lies in a maximal cone of ``coarse``."""
    return all(any(c.contains_cone(f) for c in coarse.cones) for f in fine.cones)


def random_direction(dim: int, rng: random.Random, scale: int = 10**6) -> tuple[Fraction, ...]:
    while True:
        v = tuple(Fraction(rng.randint(-scale, scale), scale) for _ in range(dim))
        if any(v):
            return v


def volume_of_simplex(vertices: Sequence[Sequence[Rational]]) -> Fraction:
    """Euclidean volume of a full-dimensional simplex given d+1 vertices."""
    base = vertices[0]
    rows = [[Fraction(a) - b for a, b in zip(v, base)] for v in vertices[1:]]
    den = lcm(*(x.denominator for r in rows for x in r)) if rows else 1
    d = len(rows)
    ints = [[int(x * den) for x in r] for r in rows]
    fact = 1
    for k in range(2, d + 1):
        fact *= k
    return Fraction(abs(det(ints)), fact * den**d)


def integer_bounds(p: Polytope) -> list[tuple[int, int]]:
    """Smallest integer box containing the polytope."""
    return [
        (ceil(min(Fraction(v[k]) for v in p.vertices)), floor(max(Fraction(v[k]) for v in p.vertices)))
        for k in range(p.dim)
    ]
