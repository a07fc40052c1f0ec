"""Bundled examples, parametric families, closed forms."""

import pytest

from hypermaps.errors import UnknownFamily
from hypermaps.generators import (
    closed_form,
    cycle_hypertree,
    example,
    is_hypertree,
    ladder,
    ladder_tree,
    random_hypertree,
    star,
)
from hypermaps.genuspoly import GenusPolynomial, euler_genus_polynomial
from hypermaps.duality import EdgeSubset, spanning_counts


def test_example_tags(plane, torus, fig7):
    assert example("plane_example") == plane
    assert example("torus_example") == torus
    assert example("fig7") == fig7
    with pytest.raises(UnknownFamily):
        example("klein")


def test_fig7_hyperedge_pairs(fig7):
    e1 = fig7.hyperedge_sets[fig7.hyperedge_names.index("e1")]
    assert {fig7.external(x) for x in e1} == {1, 5, 19, 4, 18, 8}


def test_ladder_structure():
    h = ladder(2)
    assert (h.v, h.e) == (2, 2) and h.counts().eps == 0
    for n in range(2, 7):
        h = ladder(n)
        cb = h.counts()
        assert (cb.v, cb.e, cb.sum_n, cb.f, cb.eps) == (2 * n - 2, n, 4 * n - 4, n, 0)
    assert euler_genus_polynomial(ladder(1)) == GenusPolynomial({0: 2})


def test_ladder_tree_structure():
    for n in range(1, 6):
        t = ladder_tree(n)
        cb = t.counts()
        assert (cb.v, cb.e, cb.sum_n, cb.eps) == (2 * n + 2, n, 4 * n, 0)
        assert all(t.incidences(i) == 4 for i in range(t.e))
        assert is_hypertree(t)


def test_cycle_hypertree_structure():
    for n in range(3, 7):
        h = cycle_hypertree(n)
        cb = h.counts()
        assert (cb.v, cb.e, cb.sum_n, cb.f, cb.eps) == (2 * n, n, 4 * n - 3, n - 1, 0)
        assert is_hypertree(h)


def test_cycle_hypertree_spanning_subs_planar():
    for n in range(3, 7):
        h = cycle_hypertree(n)
        for mask in range(1 << h.e):
            assert spanning_counts(h, EdgeSubset(mask, h.e)).eps == 0


def test_closed_forms():
    assert closed_form("ladder", 3) == GenusPolynomial({0: 2, 2: 4, 4: 2})
    assert closed_form("cycle_hypertree", 3) == GenusPolynomial({0: 2, 2: 6})
    four = closed_form("cycle_hypertree", 4)
    assert four.eval_at_one() == 16
    assert closed_form("tree", 5) == GenusPolynomial({0: 32})
    assert closed_form("star", 1) == GenusPolynomial({0: 2})
    with pytest.raises(UnknownFamily):
        closed_form("fig7", 1)


def test_enumeration_matches_closed_forms():
    for n in range(1, 7):
        assert euler_genus_polynomial(ladder(n)) == closed_form("ladder", n)
    for n in range(3, 7):
        assert euler_genus_polynomial(cycle_hypertree(n)) == closed_form(
            "cycle_hypertree", n)


def test_ladder_and_tree_polynomials_agree():
    for n in range(1, 6):
        assert euler_genus_polynomial(ladder(n)) == euler_genus_polynomial(
            ladder_tree(n))


def test_random_hypertree_properties():
    for seed in range(6):
        t = random_hypertree(4, seed)
        assert t == random_hypertree(4, seed)  # deterministic
        assert is_hypertree(t)
        assert t.is_connected()
        assert euler_genus_polynomial(t) == GenusPolynomial({0: 2**t.e})


def test_star_and_validation():
    s = star(4)
    assert s.v == 4 and s.e == 1 and s.counts().chi == 2
    assert euler_genus_polynomial(s) == GenusPolynomial({0: 2})
    with pytest.raises(UnknownFamily):
        star(0)


def test_generators_connected(plane, torus, fig7):
    for h in (plane, torus, fig7, ladder(4), ladder_tree(3),
              cycle_hypertree(5), star(3), random_hypertree(3, 1)):
        assert h.is_connected()
