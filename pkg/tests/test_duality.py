"""Partial duality: the dual construction, spanning subs, genus formulas."""

import pytest

from hypermaps.duality import (
    EdgeSubset,
    check_properties,
    chi_partial_dual_formula,
    dual,
    eps_partial_dual_formula,
    gamma_partial_dual_formula,
    partial_dual,
    spanning_counts,
    spanning_face_count_restricted,
)
from hypermaps.errors import HypermapError, NotConnected
from hypermaps.generators import ladder, star
from hypermaps.model import disjoint_union
from hypermaps.perm import format_cycles, parse_cycles

FIG7_TAU_DUAL = "(1,3,9,5,7,13,19,17,21)(2,22,18,20,14,8,6,10,4)(11,23,15)(12,16,24)"


def test_fig7_partial_dual_printed_cycles(fig7):
    hd = partial_dual(fig7, EdgeSubset.parse(fig7, "e1"))
    assert hd.format_tau() == format_cycles(parse_cycles(FIG7_TAU_DUAL))
    assert hd.v == 2
    assert hd.format_psi() != fig7.format_psi()  # the e1 cycles run backwards
    assert hd.hyperedge_sets == fig7.hyperedge_sets
    assert hd.hyperedge_names == fig7.hyperedge_names


def test_empty_subset_returns_same_object(fig7):
    assert partial_dual(fig7, EdgeSubset.empty(fig7)) is fig7


def test_involution_and_symmetric_difference(fig7):
    for mask in range(16):
        ha = partial_dual(fig7, mask)
        assert partial_dual(ha, mask) == fig7
    for a in range(16):
        ha = partial_dual(fig7, a)
        for b in range(16):
            assert partial_dual(ha, b) == partial_dual(fig7, a ^ b)


def test_subset_type():
    s = EdgeSubset(0b0101, 4)
    assert s.edges() == (0, 2) and len(s) == 2
    assert s.complement().mask == 0b1010
    assert s.complement().complement() == s
    assert 2 in s and 1 not in s
    with pytest.raises(HypermapError):
        EdgeSubset(16, 4)


def test_subset_parse(fig7):
    assert EdgeSubset.parse(fig7, "e1,e3").mask == 0b101
    assert EdgeSubset.parse(fig7, "0b1010").mask == 0b1010
    assert EdgeSubset.parse(fig7, "e2").labels(fig7) == fig7.hyperedge_sets[1]


def test_dual_counts(plane):
    d = dual(plane)
    cb, orig = d.counts(), plane.counts()
    assert (cb.v, cb.f, cb.e, cb.chi) == (orig.f, orig.v, orig.e, orig.chi)
    assert dual(d) == plane


def test_dual_of_smallest_is_self_isomorphic():
    h = star(1)
    assert dual(h).is_isomorphic(h)


def test_spanning_counts_trivial_subsets(fig7):
    empty = spanning_counts(fig7, EdgeSubset.empty(fig7))
    assert empty.f == fig7.v and empty.c == fig7.v
    assert empty.chi == 2 * fig7.v and empty.eps == 0
    full = spanning_counts(fig7, EdgeSubset.full(fig7))
    cb = fig7.counts()
    assert (full.f, full.c, full.chi, full.eps) == (cb.f, cb.c, cb.chi, cb.eps)


def test_spanning_faces_equal_dual_vertices(fig7):
    sub = EdgeSubset.parse(fig7, "e1")
    assert spanning_counts(fig7, sub).f == partial_dual(fig7, sub).v == 2


def test_restricted_face_count_cross_check(plane, torus, fig7):
    for h in (plane, torus, fig7):
        for mask in range(1 << h.e):
            sub = EdgeSubset(mask, h.e)
            assert spanning_face_count_restricted(h, sub) == spanning_counts(h, sub).f


def test_chi_formula_trivial_and_both_routes(plane, torus, fig7):
    for h in (plane, torus, fig7):
        assert chi_partial_dual_formula(h, EdgeSubset.empty(h)) == h.counts().chi
        for mask in range(1 << h.e):
            assert (chi_partial_dual_formula(h, mask)
                    == partial_dual(h, mask).counts().chi)


def test_eps_formula_ladder_single_edge():
    h2 = ladder(2)
    assert eps_partial_dual_formula(h2, EdgeSubset.parse(h2, "e1")) == 2
    assert eps_partial_dual_formula(h2, EdgeSubset.empty(h2)) == h2.counts().eps


def test_gamma_formula_sums_to_subset_count(fig7):
    total = sum(1 for mask in range(16)
                if gamma_partial_dual_formula(fig7, mask) >= 0)
    assert total == 16
    for mask in range(16):
        assert 2 * gamma_partial_dual_formula(fig7, mask) == eps_partial_dual_formula(fig7, mask)


def test_complement_symmetry_and_face_vertex_swap(fig7, torus):
    for h in (fig7, torus):
        full = (1 << h.e) - 1
        for mask in range(1 << h.e):
            assert (eps_partial_dual_formula(h, mask)
                    == eps_partial_dual_formula(h, full ^ mask))
            assert (partial_dual(h, mask).counts().f
                    == partial_dual(h, full ^ mask).v)


def test_check_properties_all_pass(plane, fig7):
    for h in (plane, fig7):
        for mask in range(1 << h.e):
            assert check_properties(h, mask).ok
    rep = check_properties(fig7, 0b0011, 0b0101)
    assert rep.ok
    rep = check_properties(fig7, 0, 0b1111)
    assert rep.ok


def test_orientability_preserved_under_duals(torus):
    for mask in range(16):
        assert partial_dual(torus, mask).is_orientable()


def test_formulas_require_connected(plane):
    two = disjoint_union(plane, plane)
    with pytest.raises(NotConnected):
        chi_partial_dual_formula(two, 0)
    with pytest.raises(NotConnected):
        eps_partial_dual_formula(two, 0)
