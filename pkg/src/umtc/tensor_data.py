"""Skeletal multiplicity-free F and R symbols.

Conventions (``[F^{abc}_d]_{e,f}`` with ``e`` in ``a x b`` and ``f`` in ``b x c``)::

    pentagon  F^{fcd}_{e;g,l} F^{abl}_{e;f,k} = sum_h F^{abc}_{g;f,h} F^{ahd}_{e;g,k} F^{bcd}_{k;h,l}
    hexagon   R^{ca}_e F^{acb}_{d;e,g} R^{cb}_g = sum_f F^{cab}_{d;e,f} R^{cf}_d F^{abc}_{d;f,g}

and the second hexagon with every ``R^{xy}_z`` replaced by ``(R^{yx}_z)^{-1}``.
Admissibility is always recomputed from the fusion tensor.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from ._numeric import resolve_tol
from .errors import IncompleteTableError, InvalidGaugeError, StructuralError, UnsupportedError
from .fusion import FusionRing

FKey = tuple[int, int, int, int, int, int]
RKey = tuple[int, int, int]


def f_admissible(ring: FusionRing) -> list[FKey]:
    """All ``(a, b, c, d, e, f)`` with ``e in a x b``, ``d in e x c``, ``f in b x c``, ``d in a x f``."""
    out = []
    r = ring.rank
    N = ring.N
    for a in range(r):
        for b in range(r):
            for c in range(r):
                for e in ring.fuse(a, b):
                    for d in ring.fuse(e, c):
                        for f in ring.fuse(b, c):
                            if N[a, f, d]:
                                out.append((a, b, c, d, e, f))
    return out


def _require_multiplicity_free(ring: FusionRing):
    if not ring.multiplicity_free:
        raise UnsupportedError("F/R symbols are only supported for multiplicity-free rings")


@dataclass(frozen=True, eq=False)
class FSymbols:
    """Associator scalars keyed by admissible 6-tuples of sector indices."""

    ring: FusionRing
    entries: Mapping[FKey, complex]

    def __post_init__(self):
        _require_multiplicity_free(self.ring)
        allowed = set(f_admissible(self.ring))
        clean = {}
        for key, val in self.entries.items():
            key = tuple(int(i) for i in key)
            if key not in allowed:
                raise StructuralError(f"F entry on non-admissible tuple {key}")
            clean[key] = complex(val)
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key) -> complex:
        try:
            return self.entries[key]
        except KeyError:
            raise IncompleteTableError(f"missing F entry {key}") from None

    def missing(self) -> list[FKey]:
        return [k for k in f_admissible(self.ring) if k not in self.entries]

    def require_complete(self):
        miss = self.missing()
        if miss:
            raise IncompleteTableError(f"F table lacks {len(miss)} admissible entries, first {miss[0]}")

    def block(self, a: int, b: int, c: int, d: int):
        """``(es, fs, matrix)`` for the F-move ``(a b) c -> a (b c)`` with total charge ``d``."""
        ring = self.ring
        es = [e for e in ring.fuse(a, b) if ring.N[e, c, d]]
        fs = [f for f in ring.fuse(b, c) if ring.N[a, f, d]]
        M = np.array([[self[(a, b, c, d, e, f)] for f in fs] for e in es], dtype=complex).reshape(len(es), len(fs))
        return es, fs, M

    def blocks(self):
        r = self.ring.rank
        for a in range(r):
            for b in range(r):
                for c in range(r):
                    for d in range(r):
                        es, fs, M = self.block(a, b, c, d)
                        if es or fs:
                            yield (a, b, c, d), es, fs, M

    def __eq__(self, other):
        return isinstance(other, FSymbols) and self.ring == other.ring and self.entries == other.entries


@dataclass(frozen=True, eq=False)
class RSymbols:
    """Braiding scalars ``R^{ab}_c`` keyed by admissible ``(a, b, c)``."""

    ring: FusionRing
    entries: Mapping[RKey, complex]

    def __post_init__(self):
        _require_multiplicity_free(self.ring)
        allowed = set(self.ring.channels())
        clean = {}
        for key, val in self.entries.items():
            key = tuple(int(i) for i in key)
            if key not in allowed:
                raise StructuralError(f"R entry on non-admissible channel {key}")
            clean[key] = complex(val)
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key) -> complex:
        try:
            return self.entries[key]
        except KeyError:
            raise IncompleteTableError(f"missing R entry {key}") from None

    def missing(self) -> list[RKey]:
        return [k for k in self.ring.channels() if k not in self.entries]

    def require_complete(self):
        miss = self.missing()
        if miss:
            raise IncompleteTableError(f"R table lacks {len(miss)} admissible entries, first {miss[0]}")

    def __eq__(self, other):
        return isinstance(other, RSymbols) and self.ring == other.ring and self.entries == other.entries


@dataclass(frozen=True)
class ResidualReport:
    check: str
    max_residual: float
    worst: tuple | None
    instances: int
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tol

    def __bool__(self):
        return self.passed


class _Worst:
    """Tracks the maximum residual; ties keep the first (lexicographically smallest) instance."""

    def __init__(self):
        self.value = 0.0
        self.where = None
        self.count = 0

    def add(self, residual, where):
        self.count += 1
        if residual > self.value:
            self.value = residual
            self.where = where


def check_pentagon(F: FSymbols, tol: float | None = None) -> ResidualReport:
    tol = resolve_tol(tol)
    F.require_complete()
    ring = F.ring
    r = ring.rank
    N = ring.N
    fuse = ring.fuse
    worst = _Worst()
    for a in range(r):
        for b in range(r):
            for c in range(r):
                for d in range(r):
                    for f in fuse(a, b):
                        for l in fuse(c, d):
                            for e in fuse(f, l):
                                for g in fuse(f, c):
                                    if not N[g, d, e]:
                                        continue
                                    for k in fuse(b, l):
                                        if not N[a, k, e]:
                                            continue
                                        lhs = F[(f, c, d, e, g, l)] * F[(a, b, l, e, f, k)]
                                        rhs = 0j
                                        for h in fuse(b, c):
                                            if N[a, h, g] and N[h, d, k]:
                                                rhs += F[(a, b, c, g, f, h)] * F[(a, h, d, e, g, k)] * F[(b, c, d, k, h, l)]
                                        worst.add(abs(lhs - rhs), (a, b, c, d, e, f, g, k, l))
    return ResidualReport("pentagon", worst.value, worst.where, worst.count, tol)


def hexagon_instances(ring: FusionRing):
    """Yield ``(a, b, c, d, e, g, fs)`` for every hexagon instance; ``fs`` are the summed channels."""
    r = ring.rank
    N = ring.N
    fuse = ring.fuse
    for a in range(r):
        for b in range(r):
            for c in range(r):
                for e in fuse(c, a):
                    for d in fuse(e, b):
                        for g in fuse(c, b):
                            if not N[a, g, d]:
                                continue
                            fs = tuple(f for f in fuse(a, b) if N[c, f, d])
                            yield a, b, c, d, e, g, fs


def _require_braidable(ring: FusionRing):
    if not np.array_equal(ring.N, ring.N.transpose(1, 0, 2)):
        raise UnsupportedError("a braiding requires a commutative fusion ring")


def check_hexagon(F: FSymbols, R: RSymbols, tol: float | None = None) -> ResidualReport:
    tol = resolve_tol(tol)
    if F.ring != R.ring:
        raise StructuralError("F and R tables refer to different rings")
    F.require_complete()
    R.require_complete()
    _require_braidable(F.ring)
    worst = _Worst()
    for a, b, c, d, e, g, fs in hexagon_instances(F.ring):
        mid = F[(a, c, b, d, e, g)]
        lhs = R[(c, a, e)] * mid * R[(c, b, g)]
        rhs = sum((F[(c, a, b, d, e, f)] * R[(c, f, d)] * F[(a, b, c, d, f, g)] for f in fs), 0j)
        worst.add(abs(lhs - rhs), (0, a, b, c, d, e, g))
        lhs = mid / (R[(a, c, e)] * R[(b, c, g)])
        rhs = sum((F[(c, a, b, d, e, f)] / R[(f, c, d)] * F[(a, b, c, d, f, g)] for f in fs), 0j)
        worst.add(abs(lhs - rhs), (1, a, b, c, d, e, g))
    return ResidualReport("hexagon", worst.value, worst.where, worst.count, tol)


@dataclass(frozen=True)
class UnitarityReport:
    f_residual: float
    f_worst: tuple | None
    r_residual: float
    r_worst: tuple | None
    tol: float

    @property
    def passed(self) -> bool:
        return self.f_residual < self.tol and self.r_residual < self.tol

    @property
    def max_residual(self) -> float:
        return max(self.f_residual, self.r_residual)

    @property
    def worst(self) -> tuple | None:
        return self.f_worst if self.f_residual >= self.r_residual else self.r_worst

    def __bool__(self):
        return self.passed


def check_unitarity(F: FSymbols, R: RSymbols | None = None, tol: float | None = None) -> UnitarityReport:
    """Unitarity of every F-matrix block and unimodularity of every R entry."""
    tol = resolve_tol(tol)
    F.require_complete()
    fw = _Worst()
    for key, es, fs, M in F.blocks():
        if len(es) != len(fs):
            fw.add(np.inf, key)
            continue
        fw.add(float(np.max(np.abs(M @ M.conj().T - np.eye(len(es))))), key)
    rw = _Worst()
    if R is not None:
        R.require_complete()
        for key in R.ring.channels():
            rw.add(abs(abs(R[key]) - 1.0), key)
    return UnitarityReport(fw.value, fw.where, rw.value, rw.where, tol)


@dataclass(frozen=True, eq=False)
class GaugeTransform:
    """Nonzero rescalings ``u^{ab}_c`` of the fusion vertices; unit vertices must be 1."""

    entries: Mapping[RKey, complex]

    def __getitem__(self, key) -> complex:
        return self.entries[key]


def identity_gauge(ring: FusionRing) -> GaugeTransform:
    return GaugeTransform({ch: 1.0 + 0j for ch in ring.channels()})


def random_gauge(ring: FusionRing, rng: np.random.Generator) -> GaugeTransform:
    """Random unimodular gauge, unit-normalized."""
    out = {}
    for a, b, c in ring.channels():
        out[(a, b, c)] = 1.0 + 0j if a == 0 or b == 0 else np.exp(2j * np.pi * rng.random())
    return GaugeTransform(out)


def _check_gauge(ring: FusionRing, g: GaugeTransform, tol: float):
    for ch in ring.channels():
        if ch not in g.entries:
            raise InvalidGaugeError(f"gauge undefined on channel {ch}")
        u = complex(g.entries[ch])
        if abs(u) == 0:
            raise InvalidGaugeError(f"zero gauge entry on channel {ch}")
        if (ch[0] == 0 or ch[1] == 0) and abs(u - 1) > tol:
            raise InvalidGaugeError(f"unit-channel gauge entry {ch} = {u} is not 1")


def apply_gauge(F: FSymbols, R: RSymbols | None, g: GaugeTransform, tol: float | None = None):
    """Transform ``(F, R)`` by the vertex rescaling ``g``.

    ``F'^{abc}_{d;e,f} = u^{af}_d u^{bc}_f / (u^{ab}_e u^{ec}_d) F^{abc}_{d;e,f}`` and
    ``R'^{ab}_c = u^{ba}_c / u^{ab}_c R^{ab}_c``.
    """
    tol = resolve_tol(tol)
    ring = F.ring
    _check_gauge(ring, g, tol)
    u = {k: complex(v) for k, v in g.entries.items()}
    F.require_complete()
    newF = {}
    for (a, b, c, d, e, f), val in F.entries.items():
        newF[(a, b, c, d, e, f)] = val * u[(a, f, d)] * u[(b, c, f)] / (u[(a, b, e)] * u[(e, c, d)])
    newR = None
    if R is not None:
        R.require_complete()
        newR = RSymbols(ring, {(a, b, c): val * u[(b, a, c)] / u[(a, b, c)] for (a, b, c), val in R.entries.items()})
    return FSymbols(ring, newF), newR


def reverse_braiding(R: RSymbols) -> RSymbols:
    """``R^op^{ab}_c = conj(R^{ba}_c)``; an exact involution."""
    R.require_complete()
    return RSymbols(R.ring, {(a, b, c): R[(b, a, c)].conjugate() for (a, b, c) in R.ring.channels()})


def constant_f_symbols(ring: FusionRing, value: complex = 1.0) -> FSymbols:
    return FSymbols(ring, {k: value for k in f_admissible(ring)})


def frobenius_schur_indicators(F: FSymbols, d) -> np.ndarray:
    """``nu_a = d_a [F^{a a a}_a]_{0,0}`` for self-dual ``a`` (0 otherwise); gauge invariant."""
    ring = F.ring
    out = np.zeros(ring.rank)
    for a in range(ring.rank):
        if ring.dual[a] != a:
            continue
        out[a] = (d[a] * F[(a, a, a, a, 0, 0)]).real
    return out
