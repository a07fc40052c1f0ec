"""The hypermap flag system and its derived counts.

A hypermap is stored as a triple of permutations on an even label universe:
``tau`` (vertex bi-rotations), ``psi`` (hyperedge bi-rotations) and ``iota``,
the fixed-point-free side-pairing involution that conjugates both ``tau`` and
``psi`` to their inverses.  Vertices and hyperedges are pairs of mirror
orbits; every count (v, e, f, incidence sum, Euler characteristic, Euler
genus, components, orientability) derives from the triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DuplicateLabel,
    HypermapError,
    IotaUnsolvable,
    MissingLabel,
    NotOrientable,
    PairLengthMismatch,
    SelfPairedOrbit,
    SizeMismatch,
)
from .perm import Permutation, format_cycles

__all__ = [
    "CountsBundle",
    "Hypermap",
    "DisjointSet",
    "solve_iota",
    "disjoint_union",
]


class DisjointSet:
    """Union-find over ``0..n-1`` with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]

    def roots(self) -> list[int]:
        return [x for x in range(len(self.parent)) if self.find(x) == x]


@dataclass(frozen=True)
class CountsBundle:
    """All counts of a hypermap in one record."""

    v: int
    e: int
    f: int
    sum_n: int
    chi: int
    eps: int
    c: int
    orientable: bool

    def as_dict(self) -> dict:
        return {
            "v": self.v,
            "e": self.e,
            "f": self.f,
            "sum_n": self.sum_n,
            "chi": self.chi,
            "eps": self.eps,
            "c": self.c,
            "orientable": self.orientable,
        }


def _axiom_check(tau: Permutation, psi: Permutation, iota: Permutation) -> None:
    n = tau.size
    if psi.size != n or iota.size != n:
        raise SizeMismatch("tau, psi and iota must share one universe")
    if n % 2 != 0:
        raise HypermapError(f"label universe must be even, got {n}")
    if not iota.is_involution() or not iota.is_fixed_point_free():
        raise HypermapError("iota must be a fixed-point-free involution")
    tau_inv = tau.inverse()
    psi_inv = psi.inverse()
    for x in range(n):
        if iota(tau(iota(x))) != tau_inv(x):
            raise HypermapError(f"mirror axiom fails for tau at label {x}")
        if iota(psi(iota(x))) != psi_inv(x):
            raise HypermapError(f"mirror axiom fails for psi at label {x}")


def _paired_classes(perm: Permutation, iota: Permutation, kind: str):
    """Group the orbits of ``perm`` into mirror pairs under ``iota``.

    Returns a list of frozensets (one per class, ordered by smallest label).
    A self-paired orbit is rejected.
    """
    orbit_of: dict[int, int] = {}
    orbits = perm.orbits()
    for idx, cyc in enumerate(orbits):
        for x in cyc:
            orbit_of[x] = idx
    classes = []
    seen = [False] * len(orbits)
    for idx, cyc in enumerate(orbits):
        if seen[idx]:
            continue
        partner = orbit_of[iota(cyc[0])]
        if partner == idx:
            raise SelfPairedOrbit(
                f"{kind} orbit {cyc} is its own mirror image under iota"
            )
        seen[idx] = True
        seen[partner] = True
        classes.append(frozenset(cyc) | frozenset(orbits[partner]))
    return classes


class Hypermap:
    """An immutable hypermap ``(tau, psi, iota)`` with named classes.

    Do not call the constructor directly; use :meth:`from_parts` (declared
    cycle pairs, solving for ``iota`` when absent) or :meth:`from_flags`
    (ready-made permutations).  Both validate the flag axioms.
    """

    __slots__ = (
        "tau",
        "psi",
        "iota",
        "vertex_sets",
        "hyperedge_sets",
        "vertex_names",
        "hyperedge_names",
        "label_names",
        "_vertex_of",
        "_hyperedge_of",
        "_counts",
        "_components",
    )

    def __init__(self, tau, psi, iota, vertex_sets, hyperedge_sets,
                 vertex_names, hyperedge_names, label_names):
        self.tau: Permutation = tau
        self.psi: Permutation = psi
        self.iota: Permutation = iota
        self.vertex_sets: tuple[frozenset[int], ...] = tuple(vertex_sets)
        self.hyperedge_sets: tuple[frozenset[int], ...] = tuple(hyperedge_sets)
        self.vertex_names: tuple[str, ...] = tuple(vertex_names)
        self.hyperedge_names: tuple[str, ...] = tuple(hyperedge_names)
        self.label_names: tuple[int, ...] = tuple(label_names)
        vof = [-1] * tau.size
        for i, s in enumerate(self.vertex_sets):
            for x in s:
                vof[x] = i
        eof = [-1] * tau.size
        for i, s in enumerate(self.hyperedge_sets):
            for x in s:
                eof[x] = i
        self._vertex_of = tuple(vof)
        self._hyperedge_of = tuple(eof)
        self._counts = None
        self._components = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_flags(cls, tau: Permutation, psi: Permutation, iota: Permutation,
                   hyperedge_sets: Sequence[frozenset[int]] | None = None,
                   hyperedge_names: Sequence[str] | None = None,
                   vertex_sets: Sequence[frozenset[int]] | None = None,
                   vertex_names: Sequence[str] | None = None,
                   label_names: Sequence[int] | None = None) -> "Hypermap":
        """Build and validate a hypermap from ready-made permutations.

        Vertex and hyperedge classes are derived from the iota pairing;
        passing ``vertex_sets`` or ``hyperedge_sets`` fixes their order and
        naming, and the grouping must agree with the derived one.
        """
        _axiom_check(tau, psi, iota)

        def settle(derived, declared, kind):
            if declared is None:
                return derived
            sets = [frozenset(s) for s in declared]
            if sorted(sets, key=min) != sorted(derived, key=min):
                raise HypermapError(
                    f"declared {kind} classes disagree with the iota pairing"
                )
            return sets

        vsets = settle(_paired_classes(tau, iota, "vertex"), vertex_sets, "vertex")
        esets = settle(_paired_classes(psi, iota, "hyperedge"), hyperedge_sets,
                       "hyperedge")
        n = tau.size
        if sum(len(s) for s in esets) != n:
            raise MissingLabel("hyperedge classes do not cover the universe")
        if vertex_names is None:
            vertex_names = [f"v{i + 1}" for i in range(len(vsets))]
        if hyperedge_names is None:
            hyperedge_names = [f"e{i + 1}" for i in range(len(esets))]
        if label_names is None:
            label_names = range(1, n + 1)
        return cls(tau, psi, iota, vsets, esets,
                   vertex_names, hyperedge_names, label_names)

    @classmethod
    def from_parts(cls,
                   vertex_pairs: Sequence[tuple[Sequence[int], Sequence[int]]],
                   hyperedge_pairs: Sequence[tuple[Sequence[int], Sequence[int]]],
                   iota: Permutation | None = None,
                   vertex_names: Sequence[str] | None = None,
                   hyperedge_names: Sequence[str] | None = None,
                   label_names: Sequence[int] | None = None) -> "Hypermap":
        """Build a hypermap from declared mirror-cycle pairs.

        Every label must occur in exactly one vertex cycle and exactly one
        hyperedge cycle; the two cycles of a pair must have equal length.
        When ``iota`` is omitted a side pairing satisfying both mirror axioms
        and mapping each cycle onto its declared partner is solved for.
        """
        labels_v = _collect_labels(vertex_pairs, "vertex")
        labels_e = _collect_labels(hyperedge_pairs, "hyperedge")
        if labels_v != labels_e:
            missing = labels_v.symmetric_difference(labels_e)
            raise MissingLabel(
                f"vertex and hyperedge sections cover different labels: {sorted(missing)[:8]}"
            )
        n = len(labels_v)
        if labels_v != set(range(n)):
            raise MissingLabel("labels must be dense 0..n-1 internally")
        for a, b in vertex_pairs:
            if len(a) != len(b):
                raise PairLengthMismatch(f"vertex pair {tuple(a)}/{tuple(b)}")
        for a, b in hyperedge_pairs:
            if len(a) != len(b):
                raise PairLengthMismatch(f"hyperedge pair {tuple(a)}/{tuple(b)}")
        tau = Permutation.from_cycles([c for p in vertex_pairs for c in p], n)
        psi = Permutation.from_cycles([c for p in hyperedge_pairs for c in p], n)
        if iota is None:
            iota = solve_iota(tau, psi, vertex_pairs, hyperedge_pairs)
        _axiom_check(tau, psi, iota)
        for a, b in list(vertex_pairs) + list(hyperedge_pairs):
            if {iota(x) for x in a} != set(b):
                raise IotaUnsolvable(
                    f"iota does not map cycle {tuple(a)} onto its declared partner"
                )
        vsets = [frozenset(a) | frozenset(b) for a, b in vertex_pairs]
        esets = [frozenset(a) | frozenset(b) for a, b in hyperedge_pairs]
        if vertex_names is None:
            vertex_names = [f"v{i + 1}" for i in range(len(vsets))]
        if hyperedge_names is None:
            hyperedge_names = [f"e{i + 1}" for i in range(len(esets))]
        if label_names is None:
            label_names = range(1, n + 1)
        return cls(tau, psi, iota, vsets, esets,
                   vertex_names, hyperedge_names, label_names)

    # -- basic structure ----------------------------------------------------

    @property
    def n(self) -> int:
        """Number of labels (always even)."""
        return self.tau.size

    @property
    def v(self) -> int:
        return len(self.vertex_sets)

    @property
    def e(self) -> int:
        return len(self.hyperedge_sets)

    def vertex_of(self, label: int) -> int:
        return self._vertex_of[label]

    def hyperedge_of(self, label: int) -> int:
        return self._hyperedge_of[label]

    def vertex_index(self, name: str) -> int:
        return self.vertex_names.index(name)

    def hyperedge_index(self, name: str) -> int:
        return self.hyperedge_names.index(name)

    def vertex_cycle(self, i: int) -> tuple[int, ...]:
        """One of vertex ``i``'s two mirror cycles (through its least label)."""
        return self.tau.orbit_of(min(self.vertex_sets[i]))

    def hyperedge_cycle(self, i: int) -> tuple[int, ...]:
        return self.psi.orbit_of(min(self.hyperedge_sets[i]))

    def degree(self, i: int) -> int:
        """Degree of vertex ``i`` (length of either mirror cycle)."""
        return len(self.vertex_sets[i]) // 2

    def incidences(self, i: int) -> int:
        """Number of incidences of hyperedge ``i``."""
        return len(self.hyperedge_sets[i]) // 2

    def external(self, label: int) -> int:
        return self.label_names[label]

    def internal(self, external: int) -> int:
        return self.label_names.index(external)

    def format_tau(self) -> str:
        return format_cycles(self.tau, self.label_names)

    def format_psi(self) -> str:
        return format_cycles(self.psi, self.label_names)

    def format_iota(self) -> str:
        return format_cycles(self.iota, self.label_names)

    def __eq__(self, other: object) -> bool:
        """Exact equality of the flag system on the same label set.

        Class names are presentation, not structure, and are ignored; the
        hyperedge class order is part of the subset indexing and is not.
        """
        if not isinstance(other, Hypermap):
            return NotImplemented
        return (self.tau == other.tau and self.psi == other.psi
                and self.iota == other.iota
                and self.label_names == other.label_names
                and self.hyperedge_sets == other.hyperedge_sets)

    def __hash__(self) -> int:
        return hash((self.tau, self.psi, self.iota, self.label_names))

    def __repr__(self) -> str:
        return (f"<Hypermap v={self.v} e={self.e} labels={self.n} "
                f"tau={self.format_tau()} psi={self.format_psi()}>")

    # -- derived counts -------------------------------------------------------

    def face_orbit_count(self) -> int:
        """Number of orbits of the face product (psi then tau)."""
        return self.psi.then(self.tau).orbit_count()

    def counts(self) -> CountsBundle:
        if self._counts is None:
            fo = self.face_orbit_count()
            if fo % 2:
                raise SelfPairedOrbit("odd number of face orbits; faces do not pair")
            f = fo // 2
            v = len(self.vertex_sets)
            e = len(self.hyperedge_sets)
            sum_n = self.n // 2
            chi = v + e + f - sum_n
            c = self.component_count()
            eps = 2 * c - chi
            self._counts = CountsBundle(v, e, f, sum_n, chi, eps, c,
                                        self.is_orientable())
        return self._counts

    def components(self) -> tuple[int, ...]:
        """Component index for every vertex (indices are 0-based, dense)."""
        if self._components is None:
            ds = DisjointSet(self.v)
            for s in self.hyperedge_sets:
                incident = {self._vertex_of[x] for x in s}
                it = iter(incident)
                first = next(it)
                for other in it:
                    ds.union(first, other)
            roots = {}
            assignment = []
            for i in range(self.v):
                r = ds.find(i)
                assignment.append(roots.setdefault(r, len(roots)))
            self._components = tuple(assignment)
        return self._components

    def component_count(self) -> int:
        comp = self.components()
        return max(comp) + 1 if comp else 0

    def is_connected(self) -> bool:
        return self.component_count() <= 1

    def is_orientable(self) -> bool:
        """True iff every component's labels split into two <tau, psi>-orbits."""
        comp = self.components()
        n_comp = self.component_count()
        seen = [False] * self.n
        orbits_per_comp = [0] * n_comp
        for start in range(self.n):
            if seen[start]:
                continue
            ci = comp[self._vertex_of[start]]
            orbits_per_comp[ci] += 1
            if orbits_per_comp[ci] > 2:
                return False
            stack = [start]
            seen[start] = True
            while stack:
                x = stack.pop()
                for y in (self.tau(x), self.psi(x)):
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
        return all(k == 2 for k in orbits_per_comp)

    def orientable_genus(self) -> int:
        cb = self.counts()
        if not cb.orientable:
            raise NotOrientable("orientable genus of a non-orientable hypermap")
        return cb.eps // 2

    # -- relabeling and isomorphism -------------------------------------------

    def relabel(self, new_of_old: Sequence[int]) -> "Hypermap":
        """Apply a relabeling bijection (``new_of_old[old] = new``)."""
        n = self.n
        pi = list(new_of_old)
        inv = [0] * n
        for old, new in enumerate(pi):
            inv[new] = old
        conj = lambda p: Permutation([pi[p(inv[x])] for x in range(n)])
        names = [0] * n
        for old, new in enumerate(pi):
            names[new] = self.label_names[old]
        return Hypermap(
            conj(self.tau), conj(self.psi), conj(self.iota),
            [frozenset(pi[x] for x in s) for s in self.vertex_sets],
            [frozenset(pi[x] for x in s) for s in self.hyperedge_sets],
            self.vertex_names, self.hyperedge_names, names,
        )

    def _component_labels(self) -> list[list[int]]:
        comp = self.components()
        out: list[list[int]] = [[] for _ in range(self.component_count())]
        for x in range(self.n):
            out[comp[self._vertex_of[x]]].append(x)
        return out

    def _component_signature(self, labels: list[int]):
        """Lexicographically least BFS relabeling of one component."""
        gens = (self.tau, self.psi, self.iota)
        best = None
        for start in labels:
            pos = {start: 0}
            order = [start]
            for x in order:
                for g in gens:
                    y = g(x)
                    if y not in pos:
                        pos[y] = len(order)
                        order.append(y)
            sig = tuple(
                tuple(pos[g(order[i])] for i in range(len(order)))
                for g in gens
            )
            if best is None or sig < best:
                best = sig
        return best

    def canonical_signature(self):
        """Label-order-independent signature; equal iff isomorphic."""
        sigs = sorted(
            self._component_signature(lbls) for lbls in self._component_labels()
        )
        return tuple(sigs)

    def canonical_form(self) -> "Hypermap":
        """Relabel into the canonical representative of the isomorphism class."""
        parts = sorted(
            (self._component_signature(lbls) for lbls in self._component_labels())
        )
        tau_img: list[int] = []
        psi_img: list[int] = []
        iota_img: list[int] = []
        for tau_sig, psi_sig, iota_sig in parts:
            off = len(tau_img)
            tau_img.extend(x + off for x in tau_sig)
            psi_img.extend(x + off for x in psi_sig)
            iota_img.extend(x + off for x in iota_sig)
        return Hypermap.from_flags(
            Permutation(tau_img), Permutation(psi_img), Permutation(iota_img)
        )

    def is_isomorphic(self, other: "Hypermap") -> bool:
        if (self.n, self.v, self.e) != (other.n, other.v, other.e):
            return False
        return self.canonical_signature() == other.canonical_signature()


def _collect_labels(pairs, kind: str) -> set[int]:
    seen: set[int] = set()
    for a, b in pairs:
        for cyc in (a, b):
            for x in cyc:
                if x in seen:
                    raise DuplicateLabel(f"label {x} repeated in {kind} section")
                seen.add(x)
    return seen


def solve_iota(tau: Permutation, psi: Permutation,
               vertex_pairs, hyperedge_pairs) -> Permutation:
    """Solve for a side pairing consistent with the declared cycle pairs.

    The pairing must be a fixed-point-free involution satisfying
    ``iota(tau(x)) = tau^-1(iota(x))`` and ``iota(psi(x)) = psi^-1(iota(x))``
    and mapping every declared cycle onto its partner.  Deterministic:
    the smallest unassigned label is bound first, candidates in increasing
    order, constraints propagated, with backtracking on conflict.
    """
    n = tau.size
    partner_v: list[frozenset[int] | None] = [None] * n
    partner_e: list[frozenset[int] | None] = [None] * n
    for a, b in vertex_pairs:
        fa, fb = frozenset(a), frozenset(b)
        for x in a:
            partner_v[x] = fb
        for x in b:
            partner_v[x] = fa
    for a, b in hyperedge_pairs:
        fa, fb = frozenset(a), frozenset(b)
        for x in a:
            partner_e[x] = fb
        for x in b:
            partner_e[x] = fa
    tau_inv = tau.inverse()
    psi_inv = psi.inverse()
    iota = [-1] * n

    def assign(x: int, y: int, trail: list[int]) -> bool:
        """Bind iota(x) = y and propagate; False on conflict."""
        stack = [(x, y)]
        while stack:
            x, y = stack.pop()
            if iota[x] != -1:
                if iota[x] != y:
                    return False
                continue
            if x == y or iota[y] not in (-1, x):
                return False
            if y not in partner_v[x] or y not in partner_e[x]:
                return False
            iota[x] = y
            iota[y] = x
            trail.append(x)
            stack.append((tau(x), tau_inv(y)))
            stack.append((psi(x), psi_inv(y)))
            stack.append((tau(y), tau_inv(x)))
            stack.append((psi(y), psi_inv(x)))
        return True

    def undo(trail: list[int]) -> None:
        for x in trail:
            y = iota[x]
            iota[x] = -1
            iota[y] = -1

    def search() -> bool:
        x = next((i for i in range(n) if iota[i] == -1), None)
        if x is None:
            return True
        candidates = sorted(partner_v[x] & partner_e[x])
        for y in candidates:
            if iota[y] != -1:
                continue
            trail: list[int] = []
            if assign(x, y, trail) and search():
                return True
            undo(trail)
        return False

    if not search():
        raise IotaUnsolvable("no side pairing satisfies the mirror constraints")
    return Permutation(iota)


def disjoint_union(h1: Hypermap, h2: Hypermap) -> Hypermap:
    """Disjoint union, with the second hypermap's labels shifted upward.

    External label names of the second part are renumbered after the first
    part's maximum so the combined symbol table stays collision-free; class
    names from the second part get a suffix when they would collide.
    """
    n1 = h1.n
    tau = Permutation(list(h1.tau.image) + [y + n1 for y in h2.tau.image])
    psi = Permutation(list(h1.psi.image) + [y + n1 for y in h2.psi.image])
    iota = Permutation(list(h1.iota.image) + [y + n1 for y in h2.iota.image])
    base = max(h1.label_names)
    label_names = list(h1.label_names) + [base + k + 1 for k in range(h2.n)]
    vnames = list(h1.vertex_names)
    for name in h2.vertex_names:
        vnames.append(name if name not in vnames else name + "'")
    enames = list(h1.hyperedge_names)
    for name in h2.hyperedge_names:
        enames.append(name if name not in enames else name + "'")
    return Hypermap(
        tau, psi, iota,
        list(h1.vertex_sets) + [frozenset(x + n1 for x in s) for s in h2.vertex_sets],
        list(h1.hyperedge_sets) + [frozenset(x + n1 for x in s) for s in h2.hyperedge_sets],
        vnames, enames, label_names,
    )
