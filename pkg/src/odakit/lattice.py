"""Lattice points, dilation, and the integer decomposition property."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Sequence

from .exact import in_lattice, lattice_basis
from .geometry import Inequality, Polytope, integer_bounds

LatticePoint = tuple[int, ...]


def lattice_points(p: Polytope) -> list[LatticePoint]:
    """All integer points of a full-dimensional polytope, sorted.

    Scans the integer bounding box over all but the last coordinate and solves
    the inequalities for the exact range of the last one.
    """
    p.require_full_dimensional()
    box = integer_bounds(p)
    if any(lo > hi for lo, hi in box):
        return []
    ineqs = p.inequalities
    last = [f.normal[-1] for f in ineqs]
    out = []
    for prefix in itertools.product(*(range(lo, hi + 1) for lo, hi in box[:-1])):
        lo, hi = box[-1]
        ok = True
        for f, c in zip(ineqs, last):
            slack = f.rhs - sum(a * x for a, x in zip(f.normal, prefix))
            if c > 0:
                lo = max(lo, ceil(Fraction(slack) / c))
            elif c < 0:
                hi = min(hi, floor(Fraction(slack) / c))
            elif slack > 0:
                ok = False
                break
        if ok:
            out.extend(prefix + (t,) for t in range(lo, hi + 1))
    return out


def facet_lattice_points(p: Polytope, i: int) -> list[LatticePoint]:
    f = p.inequalities[i]
    return [x for x in lattice_points(p) if f.value(x) == 0]


def dilate(p: Polytope, k: int) -> Polytope:
    """The dilation kP: vertices times k, right-hand sides times k."""
    if k < 1:
        raise ValueError("dilation factor must be a positive integer")
    verts = tuple(tuple(k * c for c in v) for v in p.vertices)
    ineqs = tuple(Inequality(f.normal, k * f.rhs) for f in p.inequalities)
    return Polytope(verts, ineqs, f"{k}*{p.name}" if p.name else "")


def sumset(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> list[LatticePoint]:
    b = list(b)
    return sorted({tuple(x + y for x, y in zip(u, v)) for u in a for v in b})


@dataclass
class DilationCheck:
    """Outcome of comparing kP's points against a k-fold sumset."""

    k: int
    holds: bool
    count_dilate: int
    count_sumset: int
    gaps: list[LatticePoint] = field(default_factory=list)


def is_idp(p: Polytope, k_max: int) -> list[DilationCheck]:
    """Check kP ∩ Z^n against the k-fold sumset of P ∩ Z^n for k = 2..k_max."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    base = lattice_points(p)
    acc = base
    out = []
    for k in range(2, k_max + 1):
        acc = sumset(acc, base)
        target = lattice_points(dilate(p, k))
        have = set(acc)
        gaps = [x for x in target if x not in have]
        out.append(DilationCheck(k, not gaps, len(target), len(acc), gaps))
    return out


@dataclass
class NormalityReport:
    base_vertex: LatticePoint
    lattice_basis: tuple[tuple[int, ...], ...]
    index: int | None  # index of the difference lattice in Z^n, None if not full rank
    checks: list[DilationCheck]

    @property
    def normal(self) -> bool:
        return all(c.holds for c in self.checks)


def difference_lattice(points: Sequence[LatticePoint]) -> tuple[tuple[int, ...], ...]:
    """HNF basis of the lattice spanned by pairwise differences."""
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    return lattice_basis(diffs)


def is_normal(p: Polytope, k_max: int) -> NormalityReport:
    """Normality relative to the affine lattice v + (difference lattice).

    P ∩ L is all of P ∩ Z^n, and its k-fold sumset lives in the coset
    k·v + Λ, so kP is intersected with that coset.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    pts = lattice_points(p)
    if not pts:
        raise ValueError("polytope has no lattice points")
    v = min(v for v in p.vertices)
    basis = difference_lattice(pts)
    index = None
    if len(basis) == p.dim:
        index = 1
        for row in basis:
            index *= next(x for x in row if x)
    acc = pts
    checks = []
    for k in range(2, k_max + 1):
        acc = sumset(acc, pts)
        shift = tuple(k * c for c in v)
        target = [x for x in lattice_points(dilate(p, k))
                  if in_lattice(tuple(a - b for a, b in zip(x, shift)), basis)]
        have = set(acc)
        gaps = [x for x in target if x not in have]
        checks.append(DilationCheck(k, not gaps, len(target), len(acc), gaps))
    return NormalityReport(tuple(v), basis, index, checks)
