import itertools
import random

import pytest
from hypothesis import given, strategies as st

from odakit.build import Graph, catalog, catalog_names, cross, cube, sep_dual, unit_cube
from odakit.exact import det, identity, matmul
from odakit.geometry import Polytope
from odakit.tumat import (
    facet_normal_matrix,
    ghouila_houri,
    is_almost_co_unimodular_pair,
    is_facet_unimodular,
    is_totally_unimodular,
    is_unimodular_mxn,
    facet_normal_split,
    facet_vertex_transform,
    normalize_column_signs,
    violating_minors,
)

K3 = Graph(3, ((1, 2), (1, 3), (2, 3)))


def small_matrices(max_side=6):
    return st.tuples(st.integers(1, max_side), st.integers(1, max_side)).flatmap(
        lambda rc: st.lists(st.lists(st.sampled_from((-1, 0, 1)), min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


def test_facet_normal_matrix():
    rows = facet_normal_matrix(unit_cube(2)).matrix
    assert set(rows) == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    assert set(facet_normal_matrix(cross(2)).matrix) == {(1, 1), (-1, 1), (1, -1), (-1, -1)}
    m = facet_normal_matrix(catalog("F.4D.0114"))
    assert m.matrix[0] == (0, 0, 0, -1) and (1, 1, 0, 1) in m.matrix
    assert m.facets == tuple(range(6))


def test_tu_examples():
    assert is_totally_unimodular(identity(4))
    res = is_totally_unimodular([(1, 1, 0, 1), (1, -1, -1, 1)])
    assert not res and res.witness.cols == (0, 1) and res.witness.det == -2
    # vertex-edge incidence of the 4-cycle is bipartite, hence TU
    c4 = [[1, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
    assert is_totally_unimodular(c4)


def test_tu_witness_is_smallest():
    res = is_totally_unimodular([[2, 0], [0, 1]])
    assert res.witness.rows == (0,) and res.witness.det == 2


@given(small_matrices())
def test_tu_agrees_with_ghouila_houri(m):
    assert bool(is_totally_unimodular(m)) == ghouila_houri(m)


@given(small_matrices(5), st.randoms(use_true_random=False))
def test_tu_hereditary(m, rng):
    if not is_totally_unimodular(m):
        return
    rows = sorted(rng.sample(range(len(m)), rng.randint(1, len(m))))
    cols = sorted(rng.sample(range(len(m[0])), rng.randint(1, len(m[0]))))
    assert is_totally_unimodular([[m[r][c] for c in cols] for r in rows])


def test_violating_minors_lists_everything():
    m = [(1, 1), (1, -1), (-1, 1)]
    found = list(violating_minors(m, 2))
    assert [(v.rows, v.det) for v in found] == [((0, 1), -2), ((0, 2), 2)]


def test_unimodular_mxn():
    assert is_unimodular_mxn([(1, 0), (0, 1), (1, 1)])
    assert not is_unimodular_mxn([(1, 0), (0, 1), (2, 1)])
    assert not is_unimodular_mxn(facet_normal_matrix(cross(2)).matrix)
    with pytest.raises(ValueError):
        is_unimodular_mxn([(1, 0), (0, 1)])


def test_facet_unimodular():
    assert is_facet_unimodular(unit_cube(3))
    assert not is_facet_unimodular(cross(2))
    assert is_facet_unimodular(sep_dual(K3))
    tri = Polytope.from_vertices([(0, 0), (1, 0), (0, 1)])
    assert is_facet_unimodular(tri)


def test_facet_vertex_transform_examples():
    p = Polytope.from_vertices([(0, 0), (1, 0), (0, 1)])
    facet = next(i for i, f in enumerate(p.inequalities) if f.rhs == -1)
    assert facet_vertex_transform(p, facet, [(1, 0), (0, 1)]).transform == identity(2)
    q = Polytope.from_vertices([(0, 0), (1, 1), (1, 0)])
    facet = next(i for i, f in enumerate(q.inequalities) if set(q.facet_vertices(i)) == {(1, 1), (1, 0)})
    a = facet_vertex_transform(q, facet, [(1, 1), (1, 0)]).transform
    assert matmul([(1, 1), (1, 0)], a) == identity(2)
    assert abs(det(a)) == 1
    with pytest.raises(ValueError):
        facet_vertex_transform(cube(2), 0)  # facet vertices (1,1),(1,-1) have det -2


@pytest.mark.parametrize("name", [n for n in catalog_names()
                                  if catalog(n).is_full_dimensional and is_facet_unimodular(catalog(n))])
def test_tu_block_after_basis_change(name):
    change, core_tu = facet_normal_split(catalog(name))
    assert abs(det(change.transform)) == 1
    rows = [change.transformed[i] for i in change.basis_rows]
    assert sorted(rows) == sorted(identity(catalog(name).dim))
    assert core_tu


def test_sign_normalization_examples():
    res = normalize_column_signs([(1, 1)])
    assert res.ok and res.signs == (1, -1)
    res = normalize_column_signs([(1, -1, 0), (0, 1, -1), (1, 0, -1)])
    assert res.ok and res.signs == (1, 1, 1)
    res = normalize_column_signs([(1, 1), (1, -1)])
    assert not res.ok and sorted(res.odd_cycle) == [0, 1]
    with pytest.raises(ValueError):
        normalize_column_signs([(2, 0)])


@given(small_matrices(6))
def test_sign_normalization_output(m):
    res = normalize_column_signs(m)
    if res.ok:
        for row in res.matrix:
            nz = [x for x in row if x]
            if len(nz) == 2:
                assert sorted(nz) == [-1, 1]


def test_almost_co_unimodular():
    assert is_almost_co_unimodular_pair(unit_cube(3), unit_cube(3)).holds
    d = sep_dual(K3)
    assert is_almost_co_unimodular_pair(d, d).holds
    res = is_almost_co_unimodular_pair(catalog("F.4D.0114"), catalog("F.4D.0038"))
    assert not res.in_given_coordinates
    assert res.witness.det == -2
    assert [res.matrix[r] for r in res.witness.rows] == [(1, 1, 0, 1), (1, -1, -1, 1)]
    assert res.verdict in ("true", "false-in-searched-coordinates")
