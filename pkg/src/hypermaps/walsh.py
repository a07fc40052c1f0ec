"""Signed bipartite maps and the Walsh construction of hypermaps.

A hypermap corresponds to an embedding of its incidence bipartite graph.  The
builder labels each bipartite edge ``i`` with four integers ``4i-3 .. 4i``
(the first block at the edge's "u" end, the second at its "v" end, odd
numbers on the left side), forms the edge permutation from the twists and the
vertex bi-rotations from the rotations, and then extracts the hypermap on the
labels that sit at vertex-side endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from .errors import CycleFormatError, DuplicateLabel, HypermapError, MissingLabel
from .model import Hypermap
from .perm import Permutation

__all__ = [
    "BipartiteVertex",
    "BipartiteEdge",
    "BipartiteMapSpec",
    "parse_bmf",
    "write_bmf",
    "walsh_build",
]


@dataclass(frozen=True)
class BipartiteVertex:
    name: str
    side: str  # "V" (hypermap vertices) or "E" (hypermap hyperedges)
    rotation: tuple[str, ...]


@dataclass(frozen=True)
class BipartiteEdge:
    name: str
    twist: int  # +1 untwisted, -1 twisted
    u_side: str = "V"  # side holding the first label block


@dataclass(frozen=True)
class BipartiteMapSpec:
    """A signed rotation system of a bipartite graph."""

    vertices: tuple[BipartiteVertex, ...]
    edges: tuple[BipartiteEdge, ...]

    def validate(self) -> None:
        edge_names = [e.name for e in self.edges]
        if len(set(edge_names)) != len(edge_names):
            raise DuplicateLabel("duplicate bipartite edge name")
        vertex_names = [w.name for w in self.vertices]
        if len(set(vertex_names)) != len(vertex_names):
            raise DuplicateLabel("duplicate bipartite vertex name")
        for w in self.vertices:
            if w.side not in ("V", "E"):
                raise HypermapError(f"vertex {w.name}: side must be V or E")
        for e in self.edges:
            if e.twist not in (1, -1) or e.u_side not in ("V", "E"):
                raise HypermapError(f"edge {e.name}: bad twist or side")
        seen = {"V": set(), "E": set()}
        for w in self.vertices:
            for name in w.rotation:
                if name not in edge_names:
                    raise MissingLabel(f"rotation of {w.name} names unknown edge {name}")
                if name in seen[w.side]:
                    raise DuplicateLabel(
                        f"edge {name} appears twice on side {w.side}"
                    )
                seen[w.side].add(name)
        for name in edge_names:
            if name not in seen["V"] or name not in seen["E"]:
                raise MissingLabel(f"edge {name} must have one end on each side")


def parse_bmf(text: str) -> BipartiteMapSpec:
    """Parse the bipartite map text format.

    Lines: ``bmf 1`` header, ``bvertex <V|E> <name> (<edge> ...)`` and
    ``edge <name> <+|-> [V|E]``; ``#`` starts a comment.
    """
    vertices: list[BipartiteVertex] = []
    edges: list[BipartiteEdge] = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "bmf":
            if parts[1:] != ["1"]:
                raise CycleFormatError(f"line {lineno}: unsupported bmf version")
            saw_header = True
        elif parts[0] == "bvertex":
            if len(parts) < 4 or parts[1] not in ("V", "E"):
                raise CycleFormatError(f"line {lineno}: bad bvertex line")
            rot = " ".join(parts[3:]).strip()
            if not (rot.startswith("(") and rot.endswith(")")):
                raise CycleFormatError(f"line {lineno}: rotation must be parenthesized")
            names = tuple(rot[1:-1].replace(",", " ").split())
            vertices.append(BipartiteVertex(parts[2], parts[1], names))
        elif parts[0] == "edge":
            if len(parts) not in (3, 4) or parts[2] not in ("+", "-"):
                raise CycleFormatError(f"line {lineno}: bad edge line")
            u_side = parts[3] if len(parts) == 4 else "V"
            edges.append(BipartiteEdge(parts[1], 1 if parts[2] == "+" else -1, u_side))
        else:
            raise CycleFormatError(f"line {lineno}: unknown directive {parts[0]!r}")
    if not saw_header:
        raise CycleFormatError("missing 'bmf 1' header")
    spec = BipartiteMapSpec(tuple(vertices), tuple(edges))
    spec.validate()
    return spec


def write_bmf(spec: BipartiteMapSpec) -> str:
    lines = ["bmf 1"]
    for w in spec.vertices:
        lines.append(f"bvertex {w.side} {w.name} ({' '.join(w.rotation)})")
    for e in spec.edges:
        lines.append(f"edge {e.name} {'+' if e.twist == 1 else '-'} {e.u_side}")
    return "\n".join(lines) + "\n"


def walsh_build(spec: BipartiteMapSpec) -> tuple[Hypermap, Hypermap]:
    """Build the bipartite map and extract its hypermap.

    Returns ``(M, H)``: the bipartite map as a hypermap over four labels per
    edge, and the hypermap over the labels at vertex-side endpoints, whose
    hyperedge permutation is the restricted face product composed with the
    inverse restricted bi-rotation.  External label numbers of ``H`` are the
    original bipartite ones, so cycles can be compared against printed data.
    """
    spec.validate()
    edge_index = {e.name: k for k, e in enumerate(spec.edges)}
    n = 4 * len(spec.edges)

    # Edge permutation from the twists: labels 4k..4k+3 internally.
    psi_pairs = []
    for k, e in enumerate(spec.edges):
        b = 4 * k
        if e.twist == 1:
            psi_pairs.append(([b, b + 2], [b + 1, b + 3]))
        else:
            psi_pairs.append(([b, b + 3], [b + 1, b + 2]))

    def end_labels(edge: BipartiteEdge, side: str) -> tuple[int, int]:
        """(left, right) labels of the edge's end on the given side."""
        b = 4 * edge_index[edge.name]
        return (b, b + 1) if edge.u_side == side else (b + 2, b + 3)

    tau_pairs = []
    for w in spec.vertices:
        lefts, rights = [], []
        for name in w.rotation:
            l, r = end_labels(spec.edges[edge_index[name]], w.side)
            lefts.append(l)
            rights.append(r)
        tau_pairs.append((lefts, list(reversed(rights))))

    iota = Permutation.from_cycles(
        [(2 * j, 2 * j + 1) for j in range(n // 2)], n
    )
    m = Hypermap.from_parts(
        tau_pairs, psi_pairs, iota=iota,
        vertex_names=[w.name for w in spec.vertices],
        hyperedge_names=[e.name for e in spec.edges],
    )

    # Extraction: D = labels at V-side endpoints.
    v_side = [w for w in spec.vertices if w.side == "V"]
    e_side = [w for w in spec.vertices if w.side == "E"]
    d: set[int] = set()
    for w in v_side:
        for name in w.rotation:
            l, r = end_labels(spec.edges[edge_index[name]], "V")
            d.update((l, r))
    order = sorted(d)
    dense = {lbl: i for i, lbl in enumerate(order)}

    tau_d = m.tau.restrict(order)
    face_d = m.psi.then(m.tau).restrict(order)
    psi_h_masked = face_d.then(tau_d.inverse())

    def extract(p: Permutation) -> Permutation:
        return Permutation([dense[p(lbl)] for lbl in order])

    tau_h = extract(tau_d)
    psi_h = extract(psi_h_masked)
    iota_h = extract(m.iota)

    vertex_sets = []
    for w in v_side:
        labels = set()
        for name in w.rotation:
            l, r = end_labels(spec.edges[edge_index[name]], "V")
            labels.update((dense[l], dense[r]))
        vertex_sets.append(frozenset(labels))
    hyperedge_sets = []
    for w in e_side:
        labels = set()
        for name in w.rotation:
            l, r = end_labels(spec.edges[edge_index[name]], "V")
            labels.update((dense[l], dense[r]))
        hyperedge_sets.append(frozenset(labels))

    h = Hypermap.from_flags(
        tau_h, psi_h, iota_h,
        hyperedge_sets=hyperedge_sets,
        hyperedge_names=[w.name for w in e_side],
        vertex_sets=vertex_sets,
        vertex_names=[w.name for w in v_side],
        label_names=[lbl + 1 for lbl in order],
    )
    return m, h
