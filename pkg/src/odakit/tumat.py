"""Facet-normal matrices and (total) unimodularity tests."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exact import IntMatrix, as_int_matrix, det, identity, inverse, matmul
from .geometry import Polytope


@dataclass(frozen=True)
class FacetNormalMatrix:
    matrix: IntMatrix
    source: str
    facets: tuple[int, ...]  # row r is the normal of facet facets[r]


@dataclass(frozen=True)
class Minor:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    det: int


@dataclass(frozen=True)
class TUResult:
    holds: bool
    witness: Minor | None = None

    def __bool__(self) -> bool:
        return self.holds


def facet_normal_matrix(p: Polytope) -> FacetNormalMatrix:
    p.require_full_dimensional()
    rows = tuple(f.normal for f in p.inequalities)
    return FacetNormalMatrix(rows, p.name, tuple(range(len(rows))))


def _minor(m: Sequence[Sequence[int]], rows: Sequence[int], cols: Sequence[int]) -> int:
    return det([[m[r][c] for c in cols] for r in rows])


def violating_minors(m: Sequence[Sequence[int]], k: int) -> Iterator[Minor]:
    """All k×k minors with determinant outside {-1, 0, 1}, lexicographically."""
    nr, nc = len(m), len(m[0])
    for rows in itertools.combinations(range(nr), k):
        for cols in itertools.combinations(range(nc), k):
            d = _minor(m, rows, cols)
            if abs(d) > 1:
                yield Minor(rows, cols, d)


def is_totally_unimodular(m: Sequence[Sequence[int]]) -> TUResult:
    """Exhaustive minor test; the witness is a smallest violating minor."""
    if not m:
        return TUResult(True)
    m = as_int_matrix(m)
    for k in range(1, min(len(m), len(m[0])) + 1):
        for bad in violating_minors(m, k):
            return TUResult(False, bad)
    return TUResult(True)


def ghouila_houri(m: Sequence[Sequence[int]]) -> bool:
    """Ghouila-Houri characterization, used as an independent TU oracle.

    Every subset of rows must admit signs making the signed row sum a
    {-1, 0, 1} vector.
    """
    if not m:
        return True
    m = as_int_matrix(m)
    if len(m) > len(m[0]):
        m = tuple(zip(*m))
    nr, nc = len(m), len(m[0])
    for size in range(1, nr + 1):
        for subset in itertools.combinations(range(nr), size):
            sums = {tuple([0] * nc)}
            for r in subset:
                sums = {tuple(a + sign * b for a, b in zip(s, m[r])) for s in sums for sign in (1, -1)}
            if not any(all(-1 <= x <= 1 for x in s) for s in sums):
                return False
    return True


def is_unimodular_mxn(m: Sequence[Sequence[int]]) -> bool:
    """Every maximal (n×n) minor of a tall m×n matrix lies in {-1, 0, 1}."""
    m = as_int_matrix(m)
    nr, nc = len(m), len(m[0])
    if nr <= nc:
        raise ValueError("matrix is not tall; use the square/TU test")
    cols = tuple(range(nc))
    return all(abs(_minor(m, rows, cols)) <= 1 for rows in itertools.combinations(range(nr), nc))


def is_facet_unimodular(p: Polytope) -> bool:
    m = facet_normal_matrix(p).matrix
    if len(m) > len(m[0]):
        return is_unimodular_mxn(m)
    return len(m) == len(m[0]) and abs(det(m)) == 1


def max_row_support(m: Sequence[Sequence[int]]) -> int:
    return max(sum(1 for x in row if x) for row in m)


def basis_transform(basis: Sequence[Sequence[int]]) -> IntMatrix:
    """Integer A with ``basis @ A == I``; the basis must have determinant ±1."""
    basis = as_int_matrix(basis)
    if len(basis) != len(basis[0]) or abs(det(basis)) != 1:
        raise ValueError("vectors do not form a lattice basis")
    return tuple(tuple(int(x) for x in row) for row in inverse(basis))


@dataclass(frozen=True)
class BasisChange:
    transform: IntMatrix
    transformed: IntMatrix
    basis_rows: tuple[int, ...]

    @property
    def core(self) -> IntMatrix:
        """Rows of the transformed matrix outside the identity block."""
        return tuple(r for i, r in enumerate(self.transformed) if i not in self.basis_rows)


def facet_vertex_transform(p: Polytope, facet: int, order: Sequence[Sequence[int]] | None = None) -> BasisChange:
    """Unimodular A_L sending the vertices of a facet to the standard basis.

    The facet's vertices, as rows of V (sorted, or in the given ``order``),
    satisfy ``V @ A_L == I``; the returned ``transformed`` matrix is ``M_P @ A_L``.
    """
    verts = p.facet_vertices(facet)
    if order is not None:
        if sorted(tuple(v) for v in order) != sorted(verts):
            raise ValueError("order must list the facet's vertices")
        verts = [tuple(v) for v in order]
    if len(verts) != p.dim:
        raise ValueError("facet vertices do not form a lattice basis")
    a = basis_transform(verts)
    return BasisChange(a, matmul(facet_normal_matrix(p).matrix, a), ())


def basis_changes(m: Sequence[Sequence[int]]) -> Iterator[BasisChange]:
    """For every n-subset of rows forming a lattice basis, the change making it I."""
    m = as_int_matrix(m)
    n = len(m[0])
    for rows in itertools.combinations(range(len(m)), n):
        sub = [m[r] for r in rows]
        if abs(det(sub)) != 1:
            continue
        a = basis_transform(sub)
        yield BasisChange(a, matmul(m, a), rows)


def facet_normal_split(p: Polytope) -> tuple[BasisChange, TUResult]:
    """First basis of facet normals, with the TU verdict on the remaining block.

    For a facet-unimodular polytope the n chosen rows become the identity and
    the rest must be totally unimodular.
    """
    m = facet_normal_matrix(p).matrix
    for change in basis_changes(m):
        return change, is_totally_unimodular(change.core)
    raise ValueError("no facet normals form a lattice basis")


@dataclass(frozen=True)
class SignNormalization:
    ok: bool
    signs: tuple[int, ...] | None = None
    matrix: IntMatrix | None = None
    odd_cycle: tuple[int, ...] | None = None


def normalize_column_signs(m: Sequence[Sequence[int]]) -> SignNormalization:
    """Flip column signs so every two-entry row becomes a difference e_i - e_j.

    Solved as a parity 2-colouring of the columns: a same-sign row forces its
    two columns into different classes, a mixed-sign row into the same class.
    On failure the odd constraint cycle (column indices) is returned.
    """
    m = as_int_matrix(m)
    if any(x not in (-1, 0, 1) for row in m for x in row):
        raise ValueError("entries must lie in {-1, 0, 1}")
    nc = len(m[0])
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nc)]
    for row in m:
        nz = [i for i, x in enumerate(row) if x]
        if len(nz) == 2:
            i, j = nz
            parity = 1 if row[i] == row[j] else 0
            adj[i].append((j, parity))
            adj[j].append((i, parity))

    colour: list[int | None] = [None] * nc
    parent: list[int | None] = [None] * nc
    for start in range(nc):
        if colour[start] is not None:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, parity in adj[u]:
                want = colour[u] ^ parity
                if colour[v] is None:
                    colour[v] = want
                    parent[v] = u
                    queue.append(v)
                elif colour[v] != want:
                    return SignNormalization(False, odd_cycle=_cycle(parent, u, v))
    signs = tuple(-1 if c else 1 for c in colour)
    flipped = tuple(tuple(x * s for x, s in zip(row, signs)) for row in m)
    return SignNormalization(True, signs, flipped)


def _cycle(parent: list[int | None], u: int, v: int) -> tuple[int, ...]:
    def path(x):
        out = [x]
        while parent[x] is not None:
            x = parent[x]
            out.append(x)
        return out

    pu, pv = path(u), path(v)
    common = set(pu) & set(pv)
    lca = next(x for x in pu if x in common)
    left = pu[: pu.index(lca) + 1]
    right = pv[: pv.index(lca)]
    return tuple(sorted(set(left + right)))


def _co_unimodular_defect(m: IntMatrix) -> tuple[str, object] | None:
    """None if m is almost co-unimodular, else a (kind, witness) pair."""
    for r, row in enumerate(m):
        for c, x in enumerate(row):
            if x not in (-1, 0, 1):
                return "entry", Minor((r,), (c,), x)
    heavy = [r for r, row in enumerate(m) if sum(1 for x in row if x) > 2]
    tu = is_totally_unimodular([m[r] for r in heavy])
    if tu:
        return None
    w = tu.witness
    return "minor", Minor(tuple(heavy[i] for i in w.rows), w.cols, w.det)


@dataclass(frozen=True)
class CoUnimodularResult:
    holds: bool
    in_given_coordinates: bool
    matrix: IntMatrix  # stacked normals in the given coordinates
    transform: IntMatrix | None = None  # coordinate change that certified the pair
    witness: Minor | None = None  # failure in the given coordinates

    @property
    def verdict(self) -> str:
        return "true" if self.holds else "false-in-searched-coordinates"


def is_almost_co_unimodular_pair(p: Polytope, q: Polytope) -> CoUnimodularResult:
    """Stacked facet normals of P over Q, tested in the given coordinates and
    then under every facet-basis change of P and of Q."""
    if p.dim != q.dim:
        raise ValueError("dimension mismatch")
    m = facet_normal_matrix(p).matrix + facet_normal_matrix(q).matrix
    defect = _co_unimodular_defect(m)
    if defect is None:
        return CoUnimodularResult(True, True, m, identity(p.dim))
    witness = defect[1]
    seen = set()
    for source in (facet_normal_matrix(p).matrix, facet_normal_matrix(q).matrix):
        for change in basis_changes(source):
            if change.transform in seen:
                continue
            seen.add(change.transform)
            if _co_unimodular_defect(matmul(m, change.transform)) is None:
                return CoUnimodularResult(True, False, m, change.transform, witness)
    return CoUnimodularResult(False, False, m, None, witness)
