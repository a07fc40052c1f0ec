"""
Flag systems and derived counts
===============================

A hypermap lives on an even set of labels carrying three permutations: the
vertex bi-rotations, the hyperedge bi-rotations, and a fixed-point-free
side-pairing involution.  Everything else - vertex and hyperedge counts,
faces, Euler characteristic, Euler genus, connectivity, orientability - is
derived.  This script builds a small hypermap three ways and reads the
counts off.
"""

from hypermaps import Hypermap, read_hmf, write_hmf

# The smallest hypermap: one vertex of degree 1, one single-incidence
# hyperedge, two labels.  Cycle pairs are declared (primary, mirror); the
# side pairing is solved for automatically.
tiny = Hypermap.from_parts(
    vertex_pairs=[([0], [1])],
    hyperedge_pairs=[([0], [1])],
)
print("tiny sphere:", tiny.counts())

# A digon: two vertices joined by two parallel 2-incidence hyperedges.
digon = Hypermap.from_parts(
    vertex_pairs=[([0, 2], [1, 3]), ([4, 6], [5, 7])],
    hyperedge_pairs=[([0, 4], [1, 5]), ([2, 6], [3, 7])],
)
print("digon:", digon.counts())

# The same data as text.  Labels in files are arbitrary positive integers;
# the iota line is optional.
text = """\
hmf 1
vertex a (1 5) (2 6)
vertex b (9 13) (10 14)
hyperedge p (1 9) (2 10)
hyperedge q (5 13) (6 14)
"""
again = read_hmf(text)
print("from text:", again.counts())
print("isomorphic to the digon:", again.is_isomorphic(digon))

# Round-tripping through the text format preserves the flag system exactly.
assert read_hmf(write_hmf(digon)) == digon
print()
print(write_hmf(digon))

# Derived structure: each vertex is a pair of mirror cycles of equal length,
# and the label count is twice the total number of incidences.
for i in range(digon.v):
    print(f"vertex {digon.vertex_names[i]}: degree {digon.degree(i)},"
          f" cycle {digon.vertex_cycle(i)}")
assert digon.n == 2 * digon.counts().sum_n
