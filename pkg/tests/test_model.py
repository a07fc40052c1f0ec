"""Hypermap validation, the side-pairing solver, counts, isomorphism."""

import random

import pytest

from hypermaps.errors import (
    DuplicateLabel,
    HypermapError,
    IotaUnsolvable,
    MissingLabel,
    NotOrientable,
    PairLengthMismatch,
    SelfPairedOrbit,
)
from hypermaps.model import Hypermap, disjoint_union, solve_iota
from hypermaps.perm import Permutation

from conftest import random_bipartite_spec
from hypermaps.walsh import walsh_build


def test_plane_counts(plane):
    cb = plane.counts()
    assert (cb.v, cb.e, cb.sum_n, cb.f, cb.chi, cb.eps) == (5, 3, 12, 6, 2, 0)
    assert cb.c == 1 and cb.orientable
    assert plane.orientable_genus() == 0


def test_torus_counts(torus):
    cb = torus.counts()
    assert (cb.v, cb.e, cb.sum_n, cb.f, cb.chi, cb.eps) == (4, 4, 13, 5, 0, 2)
    assert cb.orientable and torus.orientable_genus() == 1


def test_fig7_counts(fig7):
    cb = fig7.counts()
    assert (cb.v, cb.e, cb.sum_n, cb.f, cb.chi, cb.eps) == (4, 4, 12, 4, 0, 2)
    assert fig7.orientable_genus() == 1


def test_smallest_hypermap():
    h = Hypermap.from_parts([([0], [1])], [([0], [1])])
    cb = h.counts()
    assert (cb.v, cb.e, cb.f, cb.sum_n, cb.chi) == (1, 1, 1, 1, 2)
    assert h.iota(0) == 1


def test_structure_invariants(plane, torus, fig7):
    for h in (plane, torus, fig7):
        assert h.n == 2 * h.counts().sum_n
        assert h.n == 2 * sum(h.degree(i) for i in range(h.v))
        assert h.tau.orbit_count() % 2 == 0
        assert h.psi.orbit_count() % 2 == 0
        assert h.face_orbit_count() % 2 == 0


def test_solver_forced_value(fig7):
    # the pairing of label 1 is forced to 18 by the cycle-pair constraints
    assert fig7.external(fig7.iota(fig7.internal(1))) == 18


def test_consecutive_pairing_is_valid_for_plane(plane):
    iota, tau, psi = plane.iota, plane.tau, plane.psi
    tau_inv, psi_inv = tau.inverse(), psi.inverse()
    for x in range(plane.n):
        assert iota(tau(iota(x))) == tau_inv(x)
        assert iota(psi(iota(x))) == psi_inv(x)
    for x in range(plane.n):
        ext = plane.external(x)
        partner = ext + 1 if ext % 2 else ext - 1
        assert plane.external(iota(x)) == partner


def test_solver_on_degree_one():
    iota = solve_iota(Permutation.identity(2), Permutation.identity(2),
                      [([0], [1])], [([0], [1])])
    assert iota.image == (1, 0)


def test_solver_unsolvable():
    # A triangle vertex pair whose hyperedge pairing runs the wrong way.
    vertex_pairs = [([0, 1, 2], [3, 4, 5])]
    hyperedge_pairs = [([0], [3]), ([1], [4]), ([2], [5])]
    with pytest.raises(IotaUnsolvable):
        Hypermap.from_parts(vertex_pairs, hyperedge_pairs)


def test_solver_solvable_when_aligned():
    vertex_pairs = [([0, 1, 2], [3, 4, 5])]
    hyperedge_pairs = [([0], [3]), ([1], [5]), ([2], [4])]
    h = Hypermap.from_parts(vertex_pairs, hyperedge_pairs)
    assert h.counts().chi == 2


def test_from_parts_errors():
    with pytest.raises(PairLengthMismatch):
        Hypermap.from_parts([([0, 1], [2])], [([0], [1]), ([2], [])])
    with pytest.raises(DuplicateLabel):
        Hypermap.from_parts([([0, 0], [1, 2])], [([0, 1], [2, 2])])
    with pytest.raises(MissingLabel):
        Hypermap.from_parts([([0], [1])], [([0], [2])])


def test_self_paired_orbit_rejected():
    tau = Permutation.from_cycles([(0, 1)], 2)
    psi = Permutation.identity(2)
    iota = Permutation.from_cycles([(0, 1)], 2)
    with pytest.raises(SelfPairedOrbit):
        Hypermap.from_flags(tau, psi, iota)


def test_mirror_axiom_rejected():
    tau = Permutation.from_cycles([(0, 1, 2)], 6)
    psi = Permutation.identity(6)
    iota = Permutation.from_cycles([(0, 3), (1, 4), (2, 5)], 6)
    with pytest.raises(HypermapError):
        Hypermap.from_flags(tau, psi, iota)


def test_components_and_disjoint_union(plane):
    assert plane.component_count() == 1
    both = disjoint_union(plane, plane)
    assert both.component_count() == 2
    cb, single = both.counts(), plane.counts()
    assert cb.v == 2 * single.v and cb.e == 2 * single.e
    assert cb.f == 2 * single.f and cb.chi == 2 * single.chi
    assert cb.eps == 2 * single.eps and cb.c == 2


def test_relabel_isomorphism(fig7):
    rng = random.Random(7)
    pi = list(range(fig7.n))
    rng.shuffle(pi)
    other = fig7.relabel(pi)
    assert other.counts() == fig7.counts()
    assert fig7.is_isomorphic(other)
    assert fig7.canonical_form() == other.canonical_form()


def test_not_isomorphic(plane, torus):
    assert not plane.is_isomorphic(torus)


def test_canonical_idempotent(fig7):
    c1 = fig7.canonical_form()
    assert c1.canonical_form() == c1


def test_orientability_via_twists():
    for seed in range(25):
        spec = random_bipartite_spec(seed, twisted=False)
        _, h = walsh_build(spec)
        assert h.is_orientable()


def test_twisted_digon_nonorientable():
    from hypermaps.walsh import BipartiteEdge, BipartiteMapSpec, BipartiteVertex

    spec = BipartiteMapSpec(
        (BipartiteVertex("a", "V", ("b0", "b1")),
         BipartiteVertex("w", "E", ("b0", "b1"))),
        (BipartiteEdge("b0", 1, "V"), BipartiteEdge("b1", -1, "V")),
    )
    m, h = walsh_build(spec)
    assert not m.is_orientable() and not h.is_orientable()
    assert m.counts().chi == 1 and m.counts().eps == 1
    with pytest.raises(NotOrientable):
        h.orientable_genus()


def test_random_specs_preserve_characteristic():
    for seed in range(40):
        spec = random_bipartite_spec(seed)
        m, h = walsh_build(spec)
        assert h.counts().chi == m.counts().chi
        assert h.counts().f == m.counts().f
        assert h.counts().eps >= 0
        assert h.n == 2 * h.counts().sum_n
