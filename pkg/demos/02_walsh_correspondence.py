"""
The bipartite correspondence
============================

Every connected hypermap is an embedding of its incidence bipartite graph:
vertices on one side, hyperedges on the other, one edge per incidence.  The
builder takes a signed rotation system of that graph, labels each edge with
four integers, and extracts the hypermap on the vertex-side labels.

The two bundled rotation systems reproduce, label for label, the printed
permutation data of the worked planar and toroidal examples.
"""

from hypermaps import parse_bmf, walsh_build
from hypermaps.generators import PLANE_BMF, TORUS_BMF

print(PLANE_BMF)

spec = parse_bmf(PLANE_BMF)
bipartite_map, hypermap = walsh_build(spec)

print("bipartite map:", bipartite_map.counts())
print("hypermap:     ", hypermap.counts())

# The characteristic and the face count transfer through the correspondence.
assert hypermap.counts().chi == bipartite_map.counts().chi
assert hypermap.counts().f == bipartite_map.counts().f

# The extracted permutations, printed over the original label numbers.
print("tau(V(H)) =", hypermap.format_tau())
print("psi(E(H)) =", hypermap.format_psi())

# The toroidal system has characteristic 0 and genus 1.
_, torus = walsh_build(parse_bmf(TORUS_BMF))
print("torus:", torus.counts(), "genus", torus.orientable_genus())

# A twist flips one edge's label blocks; a twisted cycle makes the surface
# non-orientable.  A digon with one twisted edge embeds in the projective
# plane (characteristic 1).
twisted = """\
bmf 1
bvertex V a (b0 b1)
bvertex E w (b0 b1)
edge b0 + V
edge b1 - V
"""
m, h = walsh_build(parse_bmf(twisted))
print("twisted digon:", m.counts())
