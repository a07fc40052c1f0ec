"""Partial-dual genus polynomials, spectra, and the enumeration engines.

Summing ``z**eps(H^A)`` over all ``2**e`` hyperedge subsets is done by one of
two engines.  ``direct`` constructs every partial dual and reads its Euler
characteristic; it is the oracle.  ``formula`` evaluates the genus-change
formula instead.  Since ``eps(A) = 2c(A) - chi(A)``, the component terms of
that formula cancel and per subset only the two spanning-sub face counts
survive:

    eps(H^A) = 2c(H) - e(H) + sum_n(H) - f(A) - f(A^c)

so the formula engine reduces to one orbit count per subset, which is done in
numpy batches (pointer doubling over the composed permutation).  Workers
split the mask space into contiguous shards and merge by integer addition,
so output is identical for any worker count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import (
    CoefficientOverflow,
    EdgeCapExceeded,
    HypermapError,
    NotConnected,
    NotOrientable,
)
from .duality import EdgeSubset, eps_partial_dual_formula, partial_dual
from .model import Hypermap

__all__ = [
    "GenusPolynomial",
    "SpectrumReport",
    "EngineConfig",
    "EnumerationResult",
    "subset_iter",
    "eps_of_subset",
    "euler_genus_polynomial",
    "orientable_genus_polynomial",
    "enumerate_partial_duals",
    "spectrum_report",
    "poly_add",
    "poly_mul",
    "poly_eval_at_one",
    "poly_equal",
]

_COEFF_MAX = 2**64 - 1


class GenusPolynomial:
    """A polynomial with nonnegative integer coefficients, exponent-indexed.

    Zero coefficients are never stored; arithmetic is exact and checked
    against the 64-bit coefficient range.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: dict[int, int] | None = None):
        clean: dict[int, int] = {}
        for k, v in (coefficients or {}).items():
            if k < 0:
                raise HypermapError(f"negative exponent {k}")
            if v < 0:
                raise HypermapError(f"negative coefficient {v} at z^{k}")
            if v > _COEFF_MAX:
                raise CoefficientOverflow(f"coefficient {v} at z^{k} exceeds 64 bits")
            if v:
                clean[k] = int(v)
        object.__setattr__(self, "_c", dict(sorted(clean.items())))

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    def exponents(self) -> tuple[int, ...]:
        return tuple(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def add(self, other: "GenusPolynomial") -> "GenusPolynomial":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return GenusPolynomial(out)

    def mul(self, other: "GenusPolynomial") -> "GenusPolynomial":
        out: dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return GenusPolynomial(out)

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def halve_exponents(self) -> "GenusPolynomial":
        if any(k % 2 for k in self._c):
            raise HypermapError("cannot halve exponents: an odd exponent is present")
        return GenusPolynomial({k // 2: v for k, v in self._c.items()})

    def double_exponents(self) -> "GenusPolynomial":
        return GenusPolynomial({2 * k: v for k, v in self._c.items()})

    def as_json_dict(self) -> dict[str, int]:
        return {str(k): v for k, v in self._c.items()}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GenusPolynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(self._c.items()))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, v in self._c.items():
            if k == 0:
                parts.append(str(v))
            elif k == 1:
                parts.append(f"{v}z" if v != 1 else "z")
            else:
                parts.append(f"{v}z^{k}" if v != 1 else f"z^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GenusPolynomial({self._c!r})"


def poly_add(p: GenusPolynomial, q: GenusPolynomial) -> GenusPolynomial:
    return p.add(q)


def poly_mul(p: GenusPolynomial, q: GenusPolynomial) -> GenusPolynomial:
    return p.mul(q)


def poly_eval_at_one(p: GenusPolynomial) -> int:
    return p.eval_at_one()


def poly_equal(p: GenusPolynomial, q: GenusPolynomial) -> bool:
    return p == q


@dataclass(frozen=True)
class SpectrumReport:
    """Exponent set of a polynomial, its gaps, and whether it interpolates."""

    spectrum: tuple[int, ...]
    gaps: tuple[tuple[int, int, int], ...]  # (lo, hi, size) of each missing run
    interpolating: bool

    def as_dict(self) -> dict:
        return {
            "spectrum": list(self.spectrum),
            "gaps": [list(g) for g in self.gaps],
            "interpolating": self.interpolating,
        }


def spectrum_report(p: GenusPolynomial) -> SpectrumReport:
    """Spectrum and maximal missing integer intervals of a nonzero polynomial."""
    spec = p.exponents()
    if not spec:
        raise HypermapError("spectrum of the zero polynomial")
    gaps = []
    for lo, hi in zip(spec, spec[1:]):
        if hi - lo >= 2:
            gaps.append((lo + 1, hi - 1, hi - lo - 1))
    return SpectrumReport(spec, tuple(gaps), not gaps)


@dataclass(frozen=True)
class EngineConfig:
    """How to run a subset enumeration."""

    engine: str = "formula"
    worker_count: int | None = None
    edge_cap: int = 30

    def __post_init__(self):
        if self.engine not in ("direct", "formula", "both"):
            raise HypermapError(f"unknown engine {self.engine!r}")
        if not 1 <= self.edge_cap <= 62:
            raise HypermapError("edge_cap must be between 1 and 62")

    def workers(self) -> int:
        if self.worker_count is not None:
            return max(1, self.worker_count)
        env = os.environ.get("HM_THREADS", "")
        return max(1, int(env)) if env.isdigit() and env != "0" else 1


def subset_iter(e_count: int, edge_cap: int = 62):
    """All hyperedge bitmasks for ``e_count`` hyperedges, ascending."""
    if e_count > edge_cap:
        raise EdgeCapExceeded(f"{e_count} hyperedges exceeds the cap of {edge_cap}")
    return range(1 << e_count)


# -- per-subset values -------------------------------------------------------


def eps_of_subset(h: Hypermap, a, engine: str = "formula") -> int:
    """Euler genus of one partial dual, by either engine."""
    sub = a if isinstance(a, EdgeSubset) else EdgeSubset(int(a), h.e)
    if engine == "direct":
        return 2 * h.component_count() - partial_dual(h, sub).counts().chi
    return eps_partial_dual_formula(h, sub)


# -- the vectorized formula engine -------------------------------------------


class _Kernel:
    """Batched spanning-sub face counts for one hypermap."""

    def __init__(self, h: Hypermap):
        self.n = h.n
        self.tau = np.fromiter(h.tau.image, dtype=np.int32, count=h.n)
        self.psi = np.fromiter(h.psi.image, dtype=np.int32, count=h.n)
        self.edge_labels = [
            np.fromiter(sorted(s), dtype=np.int32, count=len(s))
            for s in h.hyperedge_sets
        ]
        self.doublings = max(1, int(np.ceil(np.log2(max(self.n, 2)))))

    def face_counts(self, masks: np.ndarray) -> np.ndarray:
        """f(A) for every mask in ``masks`` (shape [B])."""
        b = masks.shape[0]
        psi_a = np.broadcast_to(np.arange(self.n, dtype=np.int32), (b, self.n)).copy()
        for j, labels in enumerate(self.edge_labels):
            rows = np.flatnonzero(masks >> j & 1)
            if rows.size:
                psi_a[rows[:, None], labels[None, :]] = self.psi[labels]
        comp = self.tau[psi_a]
        mins = np.broadcast_to(np.arange(self.n, dtype=np.int32), (b, self.n)).copy()
        ptr = comp
        for _ in range(self.doublings):
            mins = np.minimum(mins, np.take_along_axis(mins, ptr, axis=1))
            ptr = np.take_along_axis(ptr, ptr, axis=1)
        orbit_counts = (mins == np.arange(self.n, dtype=np.int32)).sum(axis=1)
        return (orbit_counts // 2).astype(np.int64)


_BATCH = 4096
_TABLE_LIMIT = 24  # above this, pair complements on the fly instead of tabulating


def _formula_eps_all(h: Hypermap, workers: int) -> np.ndarray:
    """eps(H^A) for every mask, via the full f-table (small e)."""
    e = h.e
    kern = _Kernel(h)
    total = 1 << e
    f = np.empty(total, dtype=np.int64)

    def fill(lo: int, hi: int) -> None:
        for start in range(lo, hi, _BATCH):
            stop = min(start + _BATCH, hi)
            masks = np.arange(start, stop, dtype=np.int64)
            f[start:stop] = kern.face_counts(masks)

    _run_sharded(fill, total, workers)
    cb = h.counts()
    const = 2 * cb.c - cb.e + cb.sum_n
    return const - f - f[::-1]


def _formula_bincount_paired(h: Hypermap, workers: int) -> np.ndarray:
    """Coefficient array via complement pairing, no full table (large e)."""
    e = h.e
    kern = _Kernel(h)
    cb = h.counts()
    const = 2 * cb.c - cb.e + cb.sum_n
    full = (1 << e) - 1
    half = 1 << (e - 1)
    width = const + 1  # eps <= 2c - e + sum_n - f_min - f_min, f >= 1... bounded by const
    acc_per_shard: dict[int, np.ndarray] = {}

    def run(lo: int, hi: int, shard_id: int = 0) -> None:
        acc = np.zeros(width, dtype=np.int64)
        for start in range(lo, hi, _BATCH):
            stop = min(start + _BATCH, hi)
            masks = np.arange(start, stop, dtype=np.int64)
            f_lo = kern.face_counts(masks)
            f_hi = kern.face_counts(full - masks)
            eps = const - f_lo - f_hi
            acc += np.bincount(eps, minlength=width) * 2
        acc_per_shard[shard_id] = acc

    _run_sharded(run, half, workers, with_id=True)
    out = np.zeros(width, dtype=np.int64)
    for _, acc in sorted(acc_per_shard.items()):
        out += acc
    return out


def _run_sharded(fn, total: int, workers: int, with_id: bool = False) -> None:
    workers = min(workers, max(1, total // _BATCH)) or 1
    if workers <= 1:
        if with_id:
            fn(0, total, 0)
        else:
            fn(0, total)
        return
    bounds = [total * k // workers for k in range(workers + 1)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futs = []
        for k in range(workers):
            args = (bounds[k], bounds[k + 1]) + ((k,) if with_id else ())
            futs.append(pool.submit(fn, *args))
        for fut in futs:
            fut.result()


def _poly_from_bincount(counts: np.ndarray) -> GenusPolynomial:
    return GenusPolynomial({int(k): int(v) for k, v in enumerate(counts) if v})


def _enumerate_formula(h: Hypermap, workers: int) -> GenusPolynomial:
    if h.e <= _TABLE_LIMIT:
        eps = _formula_eps_all(h, workers)
        return _poly_from_bincount(np.bincount(eps))
    return _poly_from_bincount(_formula_bincount_paired(h, workers))


def _enumerate_direct(h: Hypermap) -> GenusPolynomial:
    two_c = 2 * h.component_count()
    out: dict[int, int] = {}
    for mask in subset_iter(h.e):
        eps = two_c - partial_dual(h, EdgeSubset(mask, h.e)).counts().chi
        out[eps] = out.get(eps, 0) + 1
    return GenusPolynomial(out)


@dataclass(frozen=True)
class EnumerationResult:
    """A full subset enumeration with its reporting metadata."""

    polynomial: GenusPolynomial
    gamma_polynomial: GenusPolynomial | None
    engine: str
    engines_agree: bool | None
    subsets: int
    elapsed_ms: float

    def as_dict(self) -> dict:
        rep = spectrum_report(self.polynomial)
        out = {
            "polynomial": self.polynomial.as_json_dict(),
            "spectrum": list(rep.spectrum),
            "gaps": [list(g) for g in rep.gaps],
            "interpolating": rep.interpolating,
            "engine": self.engine,
            "subsets": self.subsets,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.engines_agree is not None:
            out["engines_agree"] = self.engines_agree
        if self.gamma_polynomial is not None:
            grep = spectrum_report(self.gamma_polynomial)
            out["gamma_polynomial"] = self.gamma_polynomial.as_json_dict()
            out["gamma_spectrum"] = list(grep.spectrum)
        return out


def _guard(h: Hypermap, cfg: EngineConfig) -> None:
    if not h.is_connected():
        raise NotConnected("genus polynomials are defined for connected hypermaps")
    if h.e > cfg.edge_cap:
        raise EdgeCapExceeded(
            f"{h.e} hyperedges exceeds the configured cap of {cfg.edge_cap}"
        )


def euler_genus_polynomial(h: Hypermap, cfg: EngineConfig | None = None) -> GenusPolynomial:
    """The partial-dual Euler-genus polynomial: sum of z^eps(H^A) over all A."""
    cfg = cfg or EngineConfig()
    _guard(h, cfg)
    if cfg.engine == "direct":
        return _enumerate_direct(h)
    poly = _enumerate_formula(h, cfg.workers())
    if cfg.engine == "both":
        direct = _enumerate_direct(h)
        if direct != poly:
            raise HypermapError(
                f"engine disagreement: direct {direct} vs formula {poly}"
            )
    return poly


def orientable_genus_polynomial(h: Hypermap, cfg: EngineConfig | None = None) -> GenusPolynomial:
    """The partial-dual orientable-genus polynomial (exponents are eps/2)."""
    if not h.is_orientable():
        raise NotOrientable("orientable-genus polynomial of a non-orientable hypermap")
    return euler_genus_polynomial(h, cfg).halve_exponents()


def enumerate_partial_duals(h: Hypermap, cfg: EngineConfig | None = None) -> EnumerationResult:
    """Run a full enumeration and package polynomial, spectrum and metadata."""
    cfg = cfg or EngineConfig()
    _guard(h, cfg)
    t0 = time.perf_counter()
    engines_agree: bool | None = None
    if cfg.engine == "direct":
        poly = _enumerate_direct(h)
    elif cfg.engine == "formula":
        poly = _enumerate_formula(h, cfg.workers())
    else:
        poly = _enumerate_formula(h, cfg.workers())
        engines_agree = poly == _enumerate_direct(h)
        if not engines_agree:
            raise HypermapError("engine disagreement between direct and formula")
    gamma = poly.halve_exponents() if h.is_orientable() else None
    elapsed = (time.perf_counter() - t0) * 1000.0
    return EnumerationResult(
        polynomial=poly,
        gamma_polynomial=gamma,
        engine=cfg.engine,
        engines_agree=engines_agree,
        subsets=1 << h.e,
        elapsed_ms=elapsed,
    )
