import pytest
from hypothesis import given, strategies as st

from conftest import random_unimodular
from odakit.build import catalog, catalog_names, cross, cube
from odakit.classify import (
    check_centric_pair_hypotheses,
    classify,
    facet_lattice_bound,
    is_reflexive,
    is_reflexive_via_dual,
    is_simplicial,
    is_smooth,
    is_smooth_fano,
)
from odakit.geometry import Polytope

FULL = [n for n in catalog_names() if catalog(n).is_full_dimensional]


def test_reflexive_examples():
    assert is_reflexive(cross(3))
    assert not is_reflexive(catalog("oda2d_P"))
    assert is_reflexive(catalog("hexagon"))


@pytest.mark.parametrize("name", FULL)
def test_reflexive_two_routes(name):
    p = catalog(name)
    assert is_reflexive(p) == is_reflexive_via_dual(p)


def test_simplicial_examples():
    assert is_simplicial(cross(3))
    assert not is_simplicial(cube(3))
    assert is_simplicial(catalog("hexagon"))


def test_smooth_examples():
    assert is_smooth(catalog("unit_cube(2)"))
    assert not is_smooth(catalog("nonidp3d"))
    assert is_smooth_fano(catalog("hexagon"))
    assert not is_smooth_fano(cube(2))


@pytest.mark.parametrize("name", FULL)
def test_smooth_fano_implies_reflexive_simplicial(name):
    p = catalog(name)
    if is_smooth_fano(p):
        assert is_reflexive(p) and is_simplicial(p)


def test_facet_lattice_bound():
    assert facet_lattice_bound(cross(3)) == (3, True)
    assert facet_lattice_bound(cube(2)) == (3, True)
    assert facet_lattice_bound(cube(3)) == (9, False)


def test_classification_witnesses():
    rep = classify(cube(3))
    assert rep.reflexive and not rep.simplicial
    assert set(rep.witnesses) == {"simplicial", "smooth_fano"}
    rep = classify(catalog("nonidp3d"))
    assert rep.witnesses["smooth"] == [0, 1, 2, 3]
    for flag in ("reflexive", "simplicial", "smooth", "smooth_fano"):
        assert (flag in rep.witnesses) == (not getattr(rep, flag))


@given(st.sampled_from(["hexagon", "cross(2)", "cross(3)", "cube(2)", "nonidp3d", "unit_cube(3)"]),
       st.randoms(use_true_random=False))
def test_predicates_invariant_under_unimodular_maps(name, rng):
    p = catalog(name)
    q = p.linear_image(random_unimodular(p.dim, rng))
    a, b = classify(p), classify(q)
    assert (a.reflexive, a.simplicial, a.smooth, a.smooth_fano) == (b.reflexive, b.simplicial, b.smooth,
                                                                    b.smooth_fano)
    assert sorted(a.facet_lattice_counts) == sorted(b.facet_lattice_counts)


def test_centric_pair_examples():
    assert check_centric_pair_hypotheses(cross(2), Polytope.from_vertices([(0, 0), (1, 0), (0, 1)])).holds
    rep = check_centric_pair_hypotheses(cube(3), cube(3))
    assert not rep.holds and not rep.p_simplicial
    hexa = catalog("hexagon")
    assert check_centric_pair_hypotheses(hexa, Polytope.from_vertices([(0, 0), (1, 0), (0, -1)])).holds


def test_centric_pair_rejects_foreign_vertex():
    rep = check_centric_pair_hypotheses(cross(2), Polytope.from_vertices([(0, 0), (1, 1), (-1, 0)]))
    assert not rep.q_vertices_in_p and not rep.holds
