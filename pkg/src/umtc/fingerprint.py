"""Gauge-invariant fingerprints of braided data, used for braided-equivalence testing."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._numeric import clean_float, phase_turns
from .fusion import DimensionVector, fp_dimensions
from .modular import s_matrix, twists
from .tensor_data import FSymbols, RSymbols, frobenius_schur_indicators

DIGITS = 6
MAX_PERMUTATIONS = 200_000


@dataclass(frozen=True)
class Fingerprint:
    """``twists`` and ``fs_indicators`` are sorted multisets; ``canonical`` holds the per-sector
    ``(d, theta, nu)`` rows followed by ``S~`` and ``N`` under a canonical unit-fixing relabeling
    (or under the given labeling when ``relabeled`` is False)."""

    rank: int
    twists: tuple
    fs_indicators: tuple
    canonical: tuple
    relabeled: bool
    exhaustive: bool = True


def _rc(z) -> tuple[float, float]:
    z = complex(z)
    return (clean_float(z.real, DIGITS), clean_float(z.imag, DIGITS))


def _refine(keys, S):
    """Colour refinement of sectors by their ``(key, S~ row)`` profile; colours are label independent."""
    r = len(keys)
    colors = _rank_values([keys[a] for a in range(r)])
    while True:
        sigs = [(colors[a], tuple(sorted((colors[b], _rc(S[a, b]), _rc(S[b, a])) for b in range(r))))
                for a in range(r)]
        new = _rank_values(sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _rank_values(values):
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def canonical_order(keys, S, N) -> tuple[list[int], bool]:
    """Unit-fixing ordering of sectors minimizing the rounded ``(S~, N)`` tables."""
    r = len(keys)
    colors = _refine(keys, S)
    # unit stays first whatever its colour
    classes: dict[int, list[int]] = {}
    for a in range(1, r):
        classes.setdefault(colors[a], []).append(a)
    groups = [classes[c] for c in sorted(classes)]
    total = math.prod(math.factorial(len(g)) for g in groups)
    if total > MAX_PERMUTATIONS:
        return [0] + [a for g in groups for a in g], False
    best = None
    best_order = None
    for combo in itertools.product(*(itertools.permutations(g) for g in groups)):
        order = [0] + [a for part in combo for a in part]
        idx = np.array(order)
        val = (tuple(_rc(z) for z in S[np.ix_(idx, idx)].ravel()),
               tuple(int(n) for n in N[np.ix_(idx, idx, idx)].ravel()))
        if best is None or val < best:
            best, best_order = val, order
    return best_order, True


def invariant_fingerprint(F: FSymbols, R: RSymbols, dims: DimensionVector | None = None,
                          relabel: bool = True) -> Fingerprint:
    """Twists, ``S~`` and Frobenius-Schur indicators, all invariant under :func:`apply_gauge`.

    With ``relabel`` the tables are brought to a canonical order, so datasets related by a
    relabeling of sectors (e.g. a fusion-ring automorphism) share a fingerprint.
    """
    ring = R.ring
    dims = fp_dimensions(ring) if dims is None else dims
    d = np.asarray(dims.d)
    theta = twists(ring, dims, R)
    S = s_matrix(ring, dims, theta)
    nu = frobenius_schur_indicators(F, d)
    keys = [(clean_float(d[a], DIGITS), phase_turns(theta[a], DIGITS), clean_float(nu[a], DIGITS))
            for a in range(ring.rank)]
    if relabel:
        order, exhaustive = canonical_order(keys, S, ring.N)
    else:
        order, exhaustive = list(range(ring.rank)), True
    idx = np.array(order)
    canonical = (tuple(keys[a] for a in order),
                 tuple(_rc(z) for z in S[np.ix_(idx, idx)].ravel()),
                 tuple(int(n) for n in ring.N[np.ix_(idx, idx, idx)].ravel()))
    return Fingerprint(
        rank=ring.rank,
        twists=tuple(sorted(k[1] for k in keys)),
        fs_indicators=tuple(sorted(k[2] for k in keys)),
        canonical=canonical,
        relabeled=relabel,
        exhaustive=exhaustive,
    )


def bundle_fingerprint(bundle, relabel: bool = True) -> Fingerprint:
    return invariant_fingerprint(bundle.F, bundle.R, bundle.dims, relabel)
