"""
Constructions and their polynomial identities
=============================================

Three ways of combining or rewriting hypermaps, each with a proved effect on
the partial-dual Euler-genus polynomial: joining at a corner multiplies the
polynomials, a connecting hyperedge (bar-amalgamation) shifts terms by the
corner-face counts, and subdividing a 3-incidence hyperedge spreads every
term over shifts of 0, 2 and 4 while keeping the genus.
"""

from hypermaps import (
    AmalgamationPicks,
    CornerRef,
    add_pendant_vertex,
    bar_amalgamation,
    check_amalgamation_theorem,
    check_join_polynomial,
    check_subdivision,
    corner_face_count,
    EdgeSubset,
    euler_genus_polynomial,
    fig7_example,
    join,
    ladder,
    star,
    subdivide3,
)


def corner(h, v):
    """The corner at the least label of vertex v."""
    return CornerRef(v, min(h.vertex_sets[v]))


# Join: glue a vertex of one hypermap into a corner of another.  Counts add
# (characteristic minus 2), and the polynomial is the product.
h2a, h2b = ladder(2), ladder(2)
joined = join(h2a, corner(h2a, 0), h2b, corner(h2b, 1))
print("join of two 2-ladders:", joined.counts())
rep = check_join_polynomial(h2a, corner(h2a, 0), h2b, corner(h2b, 1))
print("product identity:", rep["ok"], "->", rep["enumerated"])

# Bar-amalgamation: a fresh hyperedge through picked corners of both sides.
# The genus grows by twice the number of distinct corner faces minus four.
f7, s3 = fig7_example(), star(3)
picks1 = AmalgamationPicks((corner(f7, 0), corner(f7, 1)))
picks2 = AmalgamationPicks((corner(s3, 0), corner(s3, 1)))
amal = bar_amalgamation(f7, picks1, s3, picks2)
k1 = corner_face_count(f7, EdgeSubset.full(f7), [c.label for c in picks1.picks])
k2 = corner_face_count(s3, EdgeSubset.full(s3), [c.label for c in picks2.picks])
print("bar-amalgamation:", amal.counts(), f"(corner faces {k1} and {k2})")
assert amal.counts().eps == f7.counts().eps + s3.counts().eps + 2 * k1 + 2 * k2 - 4

rep = check_amalgamation_theorem(f7, picks1, s3, picks2)
print("corner-face sum identity over all subsets:", rep["ok"])

# Subdivision: replace a 3-incidence hyperedge by a new vertex and three
# triple hyperedges.  Faces go up by three, the genus stays.
sub = subdivide3(f7, 0)
print("subdivided:", sub.counts())
rep = check_subdivision(f7, 0)
print("shift confinement and mass:", rep["ok"], f"(mass {rep['mass']})")

# Pendant vertices never change the genus; adding the four end vertices back
# to a hyper-ladder gives the 4-uniform tree with the same polynomial.
h = ladder(3)
grown = add_pendant_vertex(h, 0, min(h.hyperedge_sets[0]))
print("pendant:", grown.counts(), "| polynomial unchanged:",
      euler_genus_polynomial(grown) == euler_genus_polynomial(h))
