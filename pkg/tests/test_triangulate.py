from fractions import Fraction

import pytest

from odakit.build import catalog, catalog_names, cross
from odakit.classify import is_reflexive
from odakit.geometry import Polytope
from odakit.lattice import is_idp, lattice_points
from odakit.triangulate import (
    Triangulation,
    boundary_triangulation,
    centric_triangulation,
    is_unimodular_triangulation,
    placing_triangulation,
    verify_triangulation,
    volume,
)

SIMPLEX = Polytope.from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
REFLEXIVE = [n for n in catalog_names()
             if catalog(n).is_full_dimensional and is_reflexive(catalog(n)) and catalog(n).dim <= 3]


def test_placing_examples():
    assert len(placing_triangulation([(0, 0), (1, 0), (0, 1)]).cells) == 1
    sq = [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert len(placing_triangulation(sq).cells) == 2
    hexagon = [(0, 0)] + list(catalog("hexagon").vertices)
    t = placing_triangulation(hexagon, order=range(len(hexagon)))
    # 6 = 2 * interior + boundary - 2 for any full triangulation; placing does not
    # pull every cell to the first point, that is what the centric construction is for
    assert len(t.cells) == 6 and any(0 in c for c in t.cells)
    assert verify_triangulation(catalog("hexagon"), t)


def test_placing_degenerate():
    with pytest.raises(ValueError):
        placing_triangulation([(0, 0), (1, 1), (2, 2)], dim=2)
    with pytest.raises(ValueError):
        placing_triangulation([(0, 0), (0, 0)])


@pytest.mark.parametrize("name", [n for n in catalog_names() if catalog(n).is_full_dimensional
                                  and catalog(n).dim <= 3])
def test_placing_over_lattice_points_is_valid(name):
    p = catalog(name)
    t = placing_triangulation(lattice_points(p), dim=p.dim)
    assert verify_triangulation(p, t)
    assert {x for c in t.cells for x in t.cell_points(c)} == set(lattice_points(p))


def test_boundary_examples():
    assert len(boundary_triangulation(cross(2)).cells) == 4
    assert len(boundary_triangulation(catalog("hexagon")).cells) == 6
    assert len(boundary_triangulation(cross(3)).cells) == 8
    with pytest.raises(ValueError):
        boundary_triangulation(catalog("oda2d_P"))


def test_centric_examples():
    for p, n in ((cross(2), 4), (catalog("hexagon"), 6), (cross(3), 8)):
        t = centric_triangulation(p)
        assert len(t.cells) == n
        assert is_unimodular_triangulation(t) and verify_triangulation(p, t)
        origin = t.points.index(tuple([0] * p.dim))
        assert all(origin in c for c in t.cells)
    with pytest.raises(ValueError):
        centric_triangulation(catalog("nonidp3d"))


def test_verify_single_cells():
    t = Triangulation(SIMPLEX.vertices, (tuple(range(4)),))
    assert verify_triangulation(SIMPLEX, t) and is_unimodular_triangulation(t)
    p = catalog("nonidp3d")
    t = Triangulation(p.vertices, (tuple(range(4)),))
    assert verify_triangulation(p, t) and not is_unimodular_triangulation(t)


def test_verify_rejects_overlap():
    sq = Polytope.from_vertices([(0, 0), (2, 0), (0, 2), (2, 2)])
    pts = ((0, 0), (2, 0), (0, 2), (2, 2), (1, 1))
    # both diagonal splits together: volumes add up to twice the square
    t = Triangulation(pts, ((0, 1, 2), (1, 2, 3), (0, 1, 3), (0, 2, 3)))
    check = verify_triangulation(sq, t)
    assert not check.volume_identity and not check.face_to_face
    # a valid-volume but non face-to-face subdivision: a T-junction at (1,1)
    pts = ((0, 0), (2, 0), (0, 2), (2, 2), (1, 1))
    t = Triangulation(pts, ((0, 1, 3), (0, 4, 2), (4, 3, 2)))
    check = verify_triangulation(sq, t)
    assert check.volume_identity and not check.face_to_face


def test_verify_rejects_dependent_cell():
    sq = Polytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
    t = Triangulation(((0, 0), (1, 1), (2, 2)), ((0, 1, 2),))
    assert not verify_triangulation(sq, t).independent


def test_volume():
    assert volume(SIMPLEX) == Fraction(1, 6)
    assert volume(catalog("cube(3)")) == 8
    assert volume(catalog("hexagon")) == 3


@pytest.mark.parametrize("name", REFLEXIVE)
def test_facet_stars_have_idp(name):
    p = catalog(name)
    t = centric_triangulation(p)
    for i, f in enumerate(p.inequalities):
        star = [x for c in t.cells for x in t.cell_points(c) if f.value(x) == 0] + [tuple([0] * p.dim)]
        s = Polytope.from_vertices(star)
        assert all(c.holds for c in is_idp(s, 2))
