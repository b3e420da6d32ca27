"""Structural predicates: reflexive, simplicial, smooth, smooth Fano, and the
hypothesis check for the simplicial-reflexive IDP-pair theorem."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import det
from .geometry import Polytope, convex_hull, dual, edges_at_vertex
from .lattice import lattice_points


def is_reflexive(p: Polytope) -> bool:
    """Lattice polytope with the origin inside and every facet at height -1."""
    if not p.is_full_dimensional or not p.is_lattice:
        return False
    return all(f.rhs == -1 for f in p.inequalities)


def is_reflexive_via_dual(p: Polytope) -> bool:
    """Same predicate computed through the dual polytope."""
    if not p.is_full_dimensional or not p.is_lattice:
        return False
    try:
        return dual(p).is_lattice
    except ValueError:
        return False


def is_simplicial(p: Polytope) -> bool:
    p.require_full_dimensional()
    return all(len(s) == p.dim for s in p.incidence)


def smooth_witnesses(p: Polytope) -> list[int]:
    """Vertex indices where the edge directions fail to form a lattice basis."""
    bad = []
    for i, v in enumerate(p.vertices):
        dirs = edges_at_vertex(p, v)
        if len(dirs) != p.dim or abs(det(dirs)) != 1:
            bad.append(i)
    return bad


def is_smooth(p: Polytope) -> bool:
    p.require_full_dimensional()
    return not smooth_witnesses(p)


def _fano_witnesses(p: Polytope) -> list[int]:
    bad = []
    for i in range(len(p.inequalities)):
        verts = p.facet_vertices(i)
        if len(verts) != p.dim or abs(det(verts)) != 1:
            bad.append(i)
    return bad


def is_smooth_fano(p: Polytope) -> bool:
    """Simplicial reflexive with each facet's vertices a lattice basis."""
    if not (is_reflexive(p) and is_simplicial(p)):
        return False
    return not _fano_witnesses(p)


def facet_lattice_counts(p: Polytope) -> list[int]:
    pts = lattice_points(p)
    return [sum(1 for x in pts if f.value(x) == 0) for f in p.inequalities]


def facet_lattice_bound(p: Polytope) -> tuple[int, bool]:
    """Largest facet lattice-point count and whether it is at most dim + 1."""
    worst = max(facet_lattice_counts(p))
    return worst, worst <= p.dim + 1


@dataclass
class ClassificationReport:
    reflexive: bool
    simplicial: bool
    smooth: bool
    smooth_fano: bool
    facet_lattice_counts: list[int]
    witnesses: dict[str, list[int]] = field(default_factory=dict)


def classify(p: Polytope) -> ClassificationReport:
    """All predicates at once, with failing facet/vertex indices as witnesses."""
    p.require_full_dimensional()
    witnesses: dict[str, list[int]] = {}
    refl = is_reflexive(p)
    if not refl:
        witnesses["reflexive"] = [i for i, f in enumerate(p.inequalities) if f.rhs != -1]
    simp = is_simplicial(p)
    if not simp:
        witnesses["simplicial"] = [i for i, s in enumerate(p.incidence) if len(s) != p.dim]
    smooth_bad = smooth_witnesses(p)
    if smooth_bad:
        witnesses["smooth"] = smooth_bad
    fano = refl and simp and not _fano_witnesses(p)
    if not fano:
        witnesses["smooth_fano"] = (_fano_witnesses(p) if refl and simp
                                    else witnesses.get("reflexive") or witnesses["simplicial"])
    return ClassificationReport(refl, simp, not smooth_bad, fano, facet_lattice_counts(p), witnesses)


def _in_hull(points, x) -> bool:
    # x lies in conv(points) iff adding it creates no new vertex
    x = tuple(x)
    pts = [tuple(p) for p in points]
    return x in pts or x not in convex_hull(pts + [x])


@dataclass
class CentricPairReport:
    p_reflexive: bool
    p_simplicial: bool
    facet_bound: tuple[int, bool]
    q_lattice: bool
    q_contains_origin: bool
    q_vertices_in_p: bool
    triangulation: str  # "constructed" or "not constructed"

    @property
    def holds(self) -> bool:
        return (self.p_reflexive and self.p_simplicial and self.facet_bound[1] and self.q_lattice
                and self.q_contains_origin and self.q_vertices_in_p
                and self.triangulation == "constructed")


def check_centric_pair_hypotheses(p: Polytope, q: Polytope) -> CentricPairReport:
    """Hypotheses of the simplicial-reflexive IDP-pair theorem for (P, Q).

    The unimodular triangulation is attempted constructively (centric
    triangulation over a placing triangulation of the boundary); failure is
    reported as "not constructed", which says nothing about existence.
    """
    from .triangulate import (
        boundary_triangulation,
        centric_triangulation,
        is_unimodular_triangulation,
        verify_triangulation,
    )

    refl = is_reflexive(p)
    simp = p.is_full_dimensional and is_simplicial(p)
    bound = facet_lattice_bound(p) if p.is_full_dimensional else (0, False)
    origin = tuple([0] * p.dim)
    allowed = set(p.vertices) | {origin}
    tri = "not constructed"
    if refl:
        try:
            t = centric_triangulation(p, boundary_triangulation(p))
            if is_unimodular_triangulation(t) and verify_triangulation(p, t):
                tri = "constructed"
        except ValueError:
            pass
    return CentricPairReport(
        p_reflexive=refl,
        p_simplicial=simp,
        facet_bound=bound,
        q_lattice=q.is_lattice,
        q_contains_origin=_in_hull(q.vertices, origin),
        q_vertices_in_p=all(v in allowed for v in q.vertices),
        triangulation=tri,
    )

