"""
Partial duality
===============

The partial dual with respect to a hyperedge subset dualizes only those
hyperedges.  On the flag system that is a one-line operation: the new vertex
rotations are the old ones composed with the subset's hyperedge rotations.
Applied twice it gives the original back; applied for two subsets in a row
it composes by symmetric difference; the full subset is the geometric dual.
"""

from hypermaps import (
    EdgeSubset,
    check_properties,
    chi_partial_dual_formula,
    dual,
    eps_partial_dual_formula,
    fig7_example,
    partial_dual,
    spanning_counts,
)

h = fig7_example()
print("start:", h.counts())
print("tau =", h.format_tau())

# Dualize one hyperedge.  The vertex rotation becomes one long cycle pair:
# two vertices survive.
a = EdgeSubset.parse(h, "e1")
ha = partial_dual(h, a)
print("after dualizing e1:", ha.counts())
print("tau' =", ha.format_tau())

# An involution, subset by subset, at exact permutation level.
assert partial_dual(ha, a) == h

# Composition by symmetric difference.
b = EdgeSubset.parse(h, "e2,e3")
assert partial_dual(ha, b) == partial_dual(h, a.symmetric_difference(b))

# The full dual swaps vertex and face counts.
star_dual = dual(h)
assert star_dual.v == h.counts().f and star_dual.counts().f == h.v

# The genus change is computable without building the dual: the two spanning
# sub-hypermaps (the subset and its complement, over all vertices) carry
# everything.
for mask in range(1 << h.e):
    lhs = partial_dual(h, mask).counts().chi
    rhs = chi_partial_dual_formula(h, mask)
    assert lhs == rhs
print("characteristic formula verified on all", 1 << h.e, "subsets")

sub = spanning_counts(h, a)
print(f"spanning sub on e1: faces {sub.f}, components {sub.c}, genus {sub.eps}")
print("genus of the dual by formula:", eps_partial_dual_formula(h, a))

# The whole identity battery, one subset pair at a time.
report = check_properties(h, a, b)
for entry in report.entries:
    print(f"  {'ok ' if entry['ok'] else 'FAIL'} {entry['identity']}")
