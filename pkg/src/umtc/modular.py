"""Twists, the unnormalized S-matrix, modularity, Verlinde reconstruction and monodromy."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._numeric import resolve_tol
from .errors import IncoherentDataError, InconsistencyError, UnsupportedError
from .fusion import DimensionVector, FusionRing, fp_dimensions
from .tensor_data import RSymbols

VERLINDE_ROUNDING_THRESHOLD = 0.01


def twists(ring: FusionRing, dims: DimensionVector, R: RSymbols, tol: float | None = None) -> np.ndarray:
    """Ribbon twists ``theta_a = d_a^{-1} sum_c d_c R^{aa}_c``."""
    tol = resolve_tol(tol)
    R.require_complete()
    d = np.asarray(dims.d)
    theta = np.empty(ring.rank, dtype=complex)
    for a in range(ring.rank):
        theta[a] = sum(d[c] * R[(a, a, c)] for c in ring.fuse(a, a)) / d[a]
    bad = np.nonzero(np.abs(np.abs(theta) - 1) >= tol)[0]
    if len(bad):
        a = int(bad[0])
        raise IncoherentDataError(f"twist of sector {ring.labels[a]!r} has modulus {abs(theta[a]):.6g}")
    return theta


def s_matrix(ring: FusionRing, dims: DimensionVector, theta) -> np.ndarray:
    """``S~_{ab} = sum_c N_{a* b}^c theta_c / (theta_a theta_b) d_c``."""
    d = np.asarray(dims.d)
    theta = np.asarray(theta, dtype=complex)
    dual = np.array(ring.dual)
    Nbar = ring.N[dual]  # Nbar[a, b, c] = N[a*, b, c]
    S = np.einsum("abc,c->ab", Nbar, theta * d) / np.outer(theta, theta)
    return S


@dataclass(frozen=True, eq=False)
class ModularDataset:
    ring: FusionRing
    dims: DimensionVector
    theta: np.ndarray
    Stilde: np.ndarray

    @property
    def T(self) -> np.ndarray:
        return np.diag(self.theta)

    @property
    def Dsq(self) -> float:
        return self.dims.Dsq

    @property
    def d(self) -> np.ndarray:
        return np.asarray(self.dims.d)

    def unitarity_residual(self) -> float:
        S = self.Stilde
        return float(np.max(np.abs(S @ S.conj().T - self.Dsq * np.eye(len(S)))))


def modular_dataset(ring: FusionRing, R: RSymbols, dims: DimensionVector | None = None,
                    tol: float | None = None) -> ModularDataset:
    dims = fp_dimensions(ring, tol) if dims is None else dims
    theta = twists(ring, dims, R, tol)
    return ModularDataset(ring, dims, theta, s_matrix(ring, dims, theta))


@dataclass(frozen=True)
class ModularityVerdict:
    modular: bool
    residual: float
    degenerate: tuple[int, ...] = ()

    def __bool__(self):
        return self.modular


def degenerate_sectors(md: ModularDataset, tol: float | None = None) -> tuple[int, ...]:
    """Sectors ``a != 0`` with ``S~_{ab} = d_a d_b`` for all ``b``."""
    tol = resolve_tol(tol)
    d = md.d
    dev = np.abs(md.Stilde - np.outer(d, d))
    return tuple(int(a) for a in range(1, len(d)) if np.all(dev[a] < tol))


def modularity_check(md: ModularDataset, tol: float | None = None) -> ModularityVerdict:
    tol = resolve_tol(tol)
    res = md.unitarity_residual()
    if res < tol:
        return ModularityVerdict(True, res)
    return ModularityVerdict(False, res, degenerate_sectors(md, tol))


@dataclass(frozen=True)
class VerlindeResult:
    N: np.ndarray
    max_deviation: float


def verlinde_reconstruct(md: ModularDataset, tol: float | None = None) -> VerlindeResult:
    """Fusion coefficients from ``S~``; returns the rounded tensor and the largest pre-rounding deviation."""
    verdict = modularity_check(md, tol)
    if not verdict.modular:
        raise UnsupportedError("Verlinde reconstruction needs a modular dataset")
    S = md.Stilde
    raw = np.einsum("ax,bx,cx->abc", S, S, S.conj() / md.d) / md.Dsq
    rounded = np.rint(raw.real).astype(np.int64)
    dev = float(np.max(np.abs(raw - rounded)))
    if dev > VERLINDE_ROUNDING_THRESHOLD:
        raise InconsistencyError(f"Verlinde coefficients deviate from integers by {dev:.3g}")
    return VerlindeResult(rounded, dev)


@dataclass(frozen=True, eq=False)
class MonodromyMatrix:
    """Per-channel double braidings ``R^{ba}_c R^{ab}_c`` and their dimension-weighted traces."""

    ring: FusionRing
    entries: dict[tuple[int, int], dict[int, complex]]
    aggregate: np.ndarray

    def trivial(self, a: int, b: int, tol: float | None = None) -> bool:
        tol = resolve_tol(tol)
        return all(abs(v - 1) < tol for v in self.entries[(a, b)].values())


def monodromy(ring: FusionRing, dims: DimensionVector, R: RSymbols) -> MonodromyMatrix:
    R.require_complete()
    d = np.asarray(dims.d)
    r = ring.rank
    entries = {}
    agg = np.zeros((r, r), dtype=complex)
    for a in range(r):
        for b in range(r):
            chans = {c: R[(b, a, c)] * R[(a, b, c)] for c in ring.fuse(a, b)}
            entries[(a, b)] = chans
            agg[a, b] = sum(ring.N[a, b, c] * d[c] * v for c, v in chans.items())
    return MonodromyMatrix(ring, entries, agg)


def killing_ring_check(md: ModularDataset) -> float:
    """Max over ``i`` of ``|sum_j d_j S~_{ij} - D^2 delta_{i0}|``."""
    target = np.zeros(len(md.d))
    target[0] = md.Dsq
    return float(np.max(np.abs(md.Stilde @ md.d - target)))
