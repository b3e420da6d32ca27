import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import random_unimodular, zero_one_points
from odakit.build import catalog, catalog_names
from odakit.classify import is_smooth
from odakit.geometry import Polytope, contains, integer_bounds
from odakit.lattice import dilate, is_idp, is_normal, lattice_points, sumset


def scan(p):
    """Oracle: test every point of the integer bounding box."""
    box = integer_bounds(p)
    return sorted(x for x in itertools.product(*(range(lo, hi + 1) for lo, hi in box)) if contains(p, x))


UNIT_SQUARE = Polytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])


def test_unit_square_points():
    assert lattice_points(UNIT_SQUARE) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_triangle_points():
    q = catalog("oda2d_Q")
    pts = lattice_points(q)
    assert pts == scan(q)
    assert set(q.vertices) <= set(pts)
    assert (1, 1) not in pts


@pytest.mark.parametrize("name", [n for n in catalog_names() if catalog(n).is_full_dimensional])
def test_points_match_scan(name):
    p = catalog(name)
    assert lattice_points(p) == scan(p)


@given(st.integers(2, 4), st.randoms(use_true_random=False))
def test_points_under_unimodular_map(n, rng):
    p = Polytope.from_vertices(zero_one_points(n, rng))
    u = random_unimodular(n, rng)
    image = {tuple(sum(a * b for a, b in zip(row, x)) for row in u) for x in lattice_points(p)}
    assert image == set(lattice_points(p.linear_image(u)))


def test_dilate():
    seg = Polytope.from_vertices([(0,), (1,)])
    assert set(dilate(seg, 2).vertices) == {(0,), (2,)}
    assert dilate(UNIT_SQUARE, 1).vertices == UNIT_SQUARE.vertices
    assert (1, 1, 1) in lattice_points(dilate(catalog("nonidp3d"), 2))
    with pytest.raises(ValueError):
        dilate(seg, 0)


@given(st.integers(2, 3), st.randoms(use_true_random=False))
def test_dilate_counts_nondecreasing(n, rng):
    p = Polytope.from_vertices(zero_one_points(n, rng))
    counts = [len(lattice_points(dilate(p, k))) for k in (1, 2, 3)]
    assert counts == sorted(counts)


def test_sumset():
    assert sumset([(0,), (1,)], [(0,), (2,)]) == [(0,), (1,), (2,), (3,)]


def test_is_idp_examples():
    assert all(c.holds for c in is_idp(UNIT_SQUARE, 3))
    assert all(c.holds for c in is_idp(catalog("cross(2)"), 2))
    (check,) = is_idp(catalog("nonidp3d"), 2)
    assert check.k == 2 and not check.holds and check.gaps == [(1, 1, 1)]
    with pytest.raises(ValueError):
        is_idp(UNIT_SQUARE, 1)


def test_is_normal_examples():
    rep = is_normal(UNIT_SQUARE, 3)
    assert rep.normal and rep.index == 1
    rep = is_normal(catalog("nonidp3d"), 3)
    assert rep.index == 2
    # the four vertices are the only lattice points and the sumsets fill the coset
    assert rep.normal
    tri = Polytope.from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert is_normal(tri, 4).normal


def test_is_normal_needs_points():
    from fractions import Fraction as F

    tiny = Polytope.from_vertices([(F(1, 3), F(1, 3)), (F(2, 3), F(1, 3)), (F(1, 3), F(2, 3))])
    assert lattice_points(tiny) == []
    with pytest.raises(ValueError, match="no lattice points"):
        is_normal(tiny, 2)


@pytest.mark.parametrize("name", [n for n in catalog_names()
                                  if catalog(n).is_full_dimensional and catalog(n).dim <= 3
                                  and is_smooth(catalog(n))])
def test_smooth_idp_equals_normal(name):
    p = catalog(name)
    assert [c.holds for c in is_idp(p, 3)] == [c.holds for c in is_normal(p, 3).checks]
