"""Categorical checks on pairs of subcategories: trivial pairing, intersections, modular spectrum,
and comparability resolution in prime modular categories.

Only categorical content is represented; a pair ``(left, right)`` stands in for the pair of
sector subcategories attached to two mutually commuting algebras.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .bundle import CategoryBundle
from .errors import MissingDataError, OrderingError, UnsupportedError
from .subcategories import (FusionSubcategory, centralizer, closure, enumerate_subcategories, is_closed,
                            is_modular_sub, is_prime, trivial_monodromy_table)

GAUGE_CAVEAT = ("braiding-strict mode compares R symbols with 1 in the bundle's gauge; "
                "the verdict is not gauge invariant except on pointed bundles")


class Mode(str, Enum):
    MONODROMY = "monodromy"
    BRAIDING_STRICT = "braiding-strict"


class Outcome(str, Enum):
    LEFT_COLLAPSES = "left-collapses"
    RIGHT_COLLAPSES = "right-collapses"
    BOTH_TRIVIAL = "both-trivial"
    OBSTRUCTION = "obstruction"


@dataclass(frozen=True)
class AbstractPointCandidate:
    left: FusionSubcategory
    right: FusionSubcategory
    mode: Mode = Mode.MONODROMY

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.left.parent is not self.right.parent:
            raise ValueError("both subcategories must live in the same bundle")
        for D in (self.left, self.right):
            if not is_closed(D.parent.ring, D.members):
                raise ValueError(f"{D} is not closed under fusion and duals")
        if self.mode is Mode.BRAIDING_STRICT and self.left.parent.R is None:
            raise MissingDataError("braiding-strict mode needs an R table")


@dataclass(frozen=True)
class PairingReport:
    passed: bool
    mode: Mode
    failures: tuple = ()
    caveat: str = ""

    def __bool__(self):
        return self.passed


def trivial_pairing(bundle: CategoryBundle, D1: FusionSubcategory, D2: FusionSubcategory,
                    mode: Mode | str = Mode.MONODROMY) -> PairingReport:
    """Does every sector of ``D1`` braid trivially with every sector of ``D2``?

    The test is per sector pair: in the skeletal setting each isomorphism class has exactly one
    representative, so checking representatives is checking all objects.
    ``monodromy`` mode asks for trivial double braiding; ``braiding-strict`` asks for
    ``R^{ab}_c = 1`` on every channel with ``a`` in ``D1`` and ``b`` in ``D2``.
    """
    cand = AbstractPointCandidate(D1, D2, mode)
    tol = bundle.tol
    failures = []
    if cand.mode is Mode.MONODROMY:
        table = trivial_monodromy_table(bundle, "monodromy")
        failures = [(a, b) for a in D1.members for b in D2.members if not table[a, b]]
        return PairingReport(not failures, cand.mode, tuple(failures))
    R = bundle.R
    for a in D1.members:
        for b in D2.members:
            for c in bundle.ring.fuse(a, b):
                if abs(R[(a, b, c)] - 1) >= tol:
                    failures.append((a, b, c))
    return PairingReport(not failures, cand.mode, tuple(failures), GAUGE_CAVEAT)


def intersection_category(bundle: CategoryBundle, D1: FusionSubcategory, D2: FusionSubcategory) -> FusionSubcategory:
    members = tuple(sorted(set(D1.members) & set(D2.members)))
    if not is_closed(bundle.ring, members):
        raise AssertionError(f"intersection {members} of closed sets is not closed")
    return FusionSubcategory(bundle, members)


@dataclass(frozen=True)
class SpectrumVerdict:
    passed: bool
    witness: int | None = None

    def __bool__(self):
        return self.passed


def modular_spectrum_check(bundle: CategoryBundle, D: FusionSubcategory) -> SpectrumVerdict:
    """Passes iff the centralizer of ``D`` inside ``D`` is ``{1}``; otherwise a degenerate sector of ``D``."""
    verdict = is_modular_sub(bundle, D)
    if verdict.modular:
        return SpectrumVerdict(True)
    return SpectrumVerdict(False, verdict.degenerate[0])


@dataclass(frozen=True)
class ComparabilityVerdict:
    """``witness`` is set exactly for ``OBSTRUCTION``: ``kind`` is ``"monodromy"`` (a sector pair
    with nontrivial monodromy), ``"non-prime"`` (a proper modular subcategory of the bundle) or
    ``"degenerate-spectrum"`` (a closure that is not modular, with one of its degenerate sectors)."""

    outcome: Outcome
    closures: tuple[FusionSubcategory, FusionSubcategory]
    certificates: dict = field(default_factory=dict)
    witness: dict | None = None

    @property
    def obstruction(self) -> bool:
        return self.outcome is Outcome.OBSTRUCTION


def comparability_resolve(bundle: CategoryBundle, D1: FusionSubcategory, D2: FusionSubcategory) -> ComparabilityVerdict:
    """Close both inputs, check that the closures centralize each other and have modular spectrum,
    then use primality of the bundle to decide which closure collapses to ``{1}``."""
    if bundle.R is None:
        raise MissingDataError("comparability needs a braided bundle")
    if not bundle.is_modular:
        raise UnsupportedError(f"comparability is only defined for modular bundles; {bundle.name!r} is degenerate")
    C1 = closure(bundle, D1.members)
    C2 = closure(bundle, D2.members)
    Z1 = centralizer(bundle, C1).centralizer
    Z2 = centralizer(bundle, C2).centralizer
    certs = {"left_in_Z_right": C1 <= Z2, "right_in_Z_left": C2 <= Z1}
    closures = (C1, C2)

    table = trivial_monodromy_table(bundle)
    bad = [(a, b) for a in C1.members for b in C2.members if not table[a, b]]
    if bad:
        return ComparabilityVerdict(Outcome.OBSTRUCTION, closures, certs,
                                    {"kind": "monodromy", "pair": bad[0]})

    spectra = (modular_spectrum_check(bundle, C1), modular_spectrum_check(bundle, C2))
    certs["left_modular"], certs["right_modular"] = spectra[0].passed, spectra[1].passed
    for side, (C, spec) in enumerate(zip(closures, spectra)):
        if not spec.passed:
            return ComparabilityVerdict(Outcome.OBSTRUCTION, closures, certs,
                                        {"kind": "degenerate-spectrum", "side": ("left", "right")[side],
                                         "subcategory": C.members, "sector": spec.witness})

    prime = is_prime(bundle)
    certs["prime"] = prime.prime
    if not prime.prime:
        witness = prime.witness.members if prime.witness is not None else (0,)
        return ComparabilityVerdict(Outcome.OBSTRUCTION, closures, certs,
                                    {"kind": "non-prime", "subcategory": witness})
    if C1.is_trivial and C2.is_trivial:
        return ComparabilityVerdict(Outcome.BOTH_TRIVIAL, closures, certs)
    if C1.is_trivial:
        return ComparabilityVerdict(Outcome.LEFT_COLLAPSES, closures, certs)
    if C2.is_trivial:
        return ComparabilityVerdict(Outcome.RIGHT_COLLAPSES, closures, certs)
    # unreachable for coherent data: modular closures of a prime category are {1} or everything,
    # and two full closures cannot centralize each other
    raise AssertionError("mutually centralizing modular closures in a prime bundle, neither trivial")


@dataclass(frozen=True)
class HolomorphicVerdict:
    passed: bool
    witness: int | None = None

    def __bool__(self):
        return self.passed


def holomorphic_obstruction(bundle: CategoryBundle, D1: FusionSubcategory, D2: FusionSubcategory) -> HolomorphicVerdict:
    """After a trivial pairing, the intersection of the two subcategories must be ``{1}``."""
    if not trivial_pairing(bundle, D1, D2, Mode.MONODROMY).passed:
        raise OrderingError("run trivial_pairing first: the pair does not braid trivially")
    inter = intersection_category(bundle, D1, D2)
    if inter.is_trivial:
        return HolomorphicVerdict(True)
    return HolomorphicVerdict(False, next(m for m in inter.members if m != 0))


def mutual_centralizer_pairs(bundle: CategoryBundle, subs=None):
    """All ordered pairs of subcategories that lie in each other's centralizer."""
    subs = enumerate_subcategories(bundle) if subs is None else subs
    table = trivial_monodromy_table(bundle)
    for A in subs:
        for B in subs:
            if np.all(table[np.ix_(A.members, B.members)]):
                yield A, B
