"""Fusion subcategories, Müger centralizers, primality and prime factorization, Deligne products."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .bundle import CategoryBundle, verify_bundle
from .errors import (CapacityError, FactorizationCertificateError, IncoherentDataError, MissingDataError,
                     UnsupportedError)
from .fusion import FusionRing
from .modular import monodromy
from .tensor_data import FSymbols, RSymbols

MAX_ENUMERATION_RANK = 16


@dataclass(frozen=True, eq=False)
class FusionSubcategory:
    parent: CategoryBundle
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(int(m) for m in self.members))))

    @property
    def rank(self) -> int:
        return len(self.members)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.parent.labels[m] for m in self.members)

    @property
    def is_trivial(self) -> bool:
        return self.members == (0,)

    @property
    def is_full(self) -> bool:
        return self.rank == self.parent.rank

    def __contains__(self, x) -> bool:
        return x in self.members

    def __le__(self, other: "FusionSubcategory") -> bool:
        return set(self.members) <= set(other.members)

    def __eq__(self, other):
        if not isinstance(other, FusionSubcategory):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"FusionSubcategory({{{', '.join(self.labels)}}})"

    def bundle(self) -> CategoryBundle:
        """The subcategory as a standalone bundle."""
        return self.parent.extract(self.members)


def is_closed(ring: FusionRing, members: Iterable[int]) -> bool:
    s = set(members)
    if 0 not in s or any(ring.dual[a] not in s for a in s):
        return False
    return all(c in s for a in s for b in s for c in ring.fuse(a, b))


def closure(bundle: CategoryBundle, seed: Iterable = ()) -> FusionSubcategory:
    """Smallest fusion- and dual-closed member set containing ``seed`` (labels or indices)."""
    ring = bundle.ring
    members = {0} | {ring.index(x) for x in seed}
    frontier = list(members)
    while frontier:
        new = set()
        for a in frontier:
            new.add(ring.dual[a])
            for b in list(members):
                new.update(ring.fuse(a, b))
                new.update(ring.fuse(b, a))
        new -= members
        members |= new
        frontier = list(new)
    return FusionSubcategory(bundle, tuple(members))


def subcategory(bundle: CategoryBundle, members: Iterable) -> FusionSubcategory:
    """Wrap an explicit member set, rejecting it unless it is already closed."""
    idx = {bundle.ring.index(x) for x in members} | {0}
    if not is_closed(bundle.ring, idx):
        raise ValueError(f"{sorted(idx)} is not closed under fusion and duals")
    return FusionSubcategory(bundle, tuple(idx))


def enumerate_subcategories(bundle: CategoryBundle) -> list[FusionSubcategory]:
    """All fusion subcategories, by closing every subset of non-unit sectors; sorted by size then members."""
    r = bundle.rank
    if r > MAX_ENUMERATION_RANK:
        raise CapacityError(f"rank {r} exceeds the brute-force bound {MAX_ENUMERATION_RANK}; "
                            "build subcategories from generator seeds with closure()")
    found = {}
    for mask in range(1 << (r - 1)):
        seed = [i + 1 for i in range(r - 1) if mask >> i & 1]
        sub = closure(bundle, seed)
        found.setdefault(sub.members, sub)
    return [found[k] for k in sorted(found, key=lambda m: (len(m), m))]


# --- centralizers -------------------------------------------------------------------------

def trivial_monodromy_table(bundle: CategoryBundle, method: str = "auto") -> np.ndarray:
    """Boolean ``r x r`` table of trivial monodromy.

    ``"smatrix"`` uses ``S~_{xy} = d_x d_y``; ``"monodromy"`` checks every channel of
    ``R^{yx}_c R^{xy}_c``; ``"auto"`` prefers the S-matrix criterion.
    """
    if bundle.R is None:
        raise MissingDataError(f"bundle {bundle.name!r} carries no braiding; centralizers are undefined")
    tol = bundle.tol
    if method in ("auto", "smatrix"):
        md = bundle.modular_data
        d = md.d
        return np.abs(md.Stilde - np.outer(d, d)) < tol
    if method == "monodromy":
        mono = monodromy(bundle.ring, bundle.dims, bundle.R)
        r = bundle.rank
        return np.array([[mono.trivial(a, b, tol) for b in range(r)] for a in range(r)])
    raise ValueError(f"unknown centralizer method {method!r}")


@dataclass(frozen=True)
class CentralizerResult:
    source: FusionSubcategory
    centralizer: FusionSubcategory
    witness: dict = field(default_factory=dict)
    method: str = "smatrix"


def centralizer(bundle: CategoryBundle, D: FusionSubcategory, method: str = "auto",
                within: FusionSubcategory | None = None) -> CentralizerResult:
    """Müger centralizer: sectors with trivial monodromy against every member of ``D``.

    ``witness`` maps each excluded sector to a member of ``D`` it braids nontrivially with.
    With ``within``, the centralizer is taken inside that subcategory.
    """
    table = trivial_monodromy_table(bundle, method)
    pool = within.members if within is not None else range(bundle.rank)
    members, witness = [], {}
    for x in pool:
        bad = [y for y in D.members if not table[x, y]]
        if bad:
            witness[x] = bad[0]
        else:
            members.append(x)
    if not is_closed(bundle.ring, members):
        raise IncoherentDataError(f"centralizer {members} is not closed; braiding data incoherent")
    used = "smatrix" if method == "auto" else method
    return CentralizerResult(D, FusionSubcategory(bundle, tuple(members)), witness, used)


@dataclass(frozen=True)
class DoubleCentralizerReport:
    checked: int
    counterexamples: tuple = ()
    skipped_degenerate: bool = False

    @property
    def passed(self) -> bool:
        return not self.skipped_degenerate and not self.counterexamples


def double_centralizer_check(bundle: CategoryBundle) -> DoubleCentralizerReport:
    """``Z(Z(D)) = D`` for every enumerated subcategory; skipped (flagged) on degenerate bundles."""
    if not bundle.is_modular:
        return DoubleCentralizerReport(0, (), True)
    bad = []
    subs = enumerate_subcategories(bundle)
    for D in subs:
        ZZ = centralizer(bundle, centralizer(bundle, D).centralizer).centralizer
        if ZZ.members != D.members:
            bad.append((D.members, ZZ.members))
    return DoubleCentralizerReport(len(subs), tuple(bad))


@dataclass(frozen=True)
class ModularSubVerdict:
    modular: bool
    degenerate: tuple[int, ...] = ()

    def __bool__(self):
        return self.modular


def is_modular_sub(bundle: CategoryBundle, D: FusionSubcategory, method: str = "auto") -> ModularSubVerdict:
    """``D`` is modular iff its own centralizer inside ``D`` is trivial."""
    Z = centralizer(bundle, D, method, within=D).centralizer
    if Z.is_trivial:
        return ModularSubVerdict(True)
    return ModularSubVerdict(False, tuple(m for m in Z.members if m != 0))


@dataclass(frozen=True)
class PrimalityVerdict:
    prime: bool
    witness: FusionSubcategory | None = None

    def __bool__(self):
        return self.prime


def _require_modular(bundle: CategoryBundle, what: str):
    if bundle.R is None:
        raise MissingDataError(f"{what} needs a braided bundle")
    if not bundle.is_modular:
        raise UnsupportedError(f"{what} is only defined for modular bundles; {bundle.name!r} is degenerate")


def modular_subcategories(bundle: CategoryBundle, inside: FusionSubcategory | None = None) -> list[FusionSubcategory]:
    subs = enumerate_subcategories(bundle)
    if inside is not None:
        subs = [D for D in subs if D <= inside]
    return [D for D in subs if is_modular_sub(bundle, D).modular]


def is_prime(bundle: CategoryBundle) -> PrimalityVerdict:
    """Prime iff nontrivial and no modular subcategory other than ``{1}`` and the whole."""
    _require_modular(bundle, "primality")
    if bundle.rank == 1:
        return PrimalityVerdict(False, None)
    proper = [D for D in modular_subcategories(bundle) if not D.is_trivial and not D.is_full]
    if proper:
        return PrimalityVerdict(False, proper[0])
    return PrimalityVerdict(True)


# --- prime factorization ------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeFactorization:
    """``factors[i]`` are subcategories of the parent; ``bundles[i]`` the same as standalone bundles.

    ``bijection`` maps each parent sector to its tuple of factor-local indices (positions within
    ``factors[i].members``); ``order`` lists parent sectors in product (row-major) order.
    """

    parent: CategoryBundle
    factors: tuple[FusionSubcategory, ...]
    bundles: tuple[CategoryBundle, ...]
    bijection: dict
    order: tuple[int, ...]
    s_residual: float
    t_residual: float

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(f.rank for f in self.factors)


def _match_sector(bundle, prev: int, x: int, tol: float) -> int:
    md = bundle.modular_data
    d, theta = md.d, md.theta
    cands = [c for c in bundle.ring.fuse(prev, x)
             if abs(d[c] - d[prev] * d[x]) < tol and abs(theta[c] - theta[prev] * theta[x]) < tol]
    if len(cands) != 1:
        raise FactorizationCertificateError(
            f"product of sectors {bundle.labels[prev]!r} and {bundle.labels[x]!r} has {len(cands)} "
            "dimension/twist-compatible channels")
    return cands[0]


def _kron_all(mats):
    out = np.ones((1, 1), dtype=complex)
    for m in mats:
        out = np.kron(out, m)
    return out


def prime_factorize(bundle: CategoryBundle) -> PrimeFactorization:
    """Split off smallest proper modular subcategories and their centralizers until all pieces are prime.

    The resulting sector bijection is certified by Kronecker factorization of ``S~`` and ``T``.
    """
    _require_modular(bundle, "prime factorization")
    tol = bundle.tol
    factors: list[FusionSubcategory] = []
    current = FusionSubcategory(bundle, tuple(range(bundle.rank)))
    while not current.is_trivial:
        proper = [D for D in modular_subcategories(bundle, inside=current)
                  if not D.is_trivial and D.members != current.members]
        if not proper:
            factors.append(current)
            break
        D = proper[0]
        factors.append(D)
        current = centralizer(bundle, D, within=current).centralizer

    bundles = tuple(f.bundle() for f in factors)
    tuples = list(itertools.product(*(range(f.rank) for f in factors)))
    bijection = {}
    for tup in tuples:
        c = 0
        for f, i in zip(factors, tup):
            c = _match_sector(bundle, c, f.members[i], tol)
        if c in bijection:
            raise FactorizationCertificateError(f"parent sector {bundle.labels[c]!r} reached twice")
        bijection[c] = tup
    if len(bijection) != bundle.rank:
        raise FactorizationCertificateError("factor sectors do not cover the parent")

    order = np.array([next(c for c, t in bijection.items() if t == tup) for tup in tuples], dtype=int)
    md = bundle.modular_data
    S_par = md.Stilde[np.ix_(order, order)]
    T_par = md.theta[order]
    S_fac = _kron_all([b.modular_data.Stilde for b in bundles])
    T_fac = _kron_all([b.modular_data.theta.reshape(1, -1) for b in bundles]).ravel()
    s_res = float(np.max(np.abs(S_par - S_fac))) if len(order) else 0.0
    t_res = float(np.max(np.abs(T_par - T_fac))) if len(order) else 0.0
    if s_res >= tol or t_res >= tol:
        raise FactorizationCertificateError(f"Kronecker certificate failed: S residual {s_res:.3e}, "
                                            f"T residual {t_res:.3e}")
    return PrimeFactorization(bundle, tuple(factors), bundles, bijection, tuple(int(o) for o in order),
                              s_res, t_res)


# --- Deligne product ----------------------------------------------------------------------

def _pair_label(a: str, b: str) -> str:
    return f"{a}.{b}"


def deligne_product(A: CategoryBundle, B: CategoryBundle, name: str | None = None,
                    verify: bool = True) -> CategoryBundle:
    """Factorwise product; sector ``(i, j)`` gets index ``i * rank(B) + j`` (Kronecker order)."""
    r2 = B.rank
    labels = [_pair_label(a, b) for a in A.labels for b in B.labels]
    N = np.einsum("ikm,jln->ijklmn", A.ring.N, B.ring.N).reshape(A.rank * r2, A.rank * r2, A.rank * r2)
    dual = [A.ring.dual[i] * r2 + B.ring.dual[j] for i in range(A.rank) for j in range(r2)]
    ring = FusionRing(labels, dual, N)

    def pair(k1, k2):
        return tuple(x * r2 + y for x, y in zip(k1, k2))

    F = R = None
    if A.F is not None and B.F is not None:
        F = FSymbols(ring, {pair(k1, k2): v1 * v2 for k1, v1 in A.F.entries.items() for k2, v2 in B.F.entries.items()})
    if A.R is not None and B.R is not None:
        R = RSymbols(ring, {pair(k1, k2): v1 * v2 for k1, v1 in A.R.entries.items() for k2, v2 in B.R.entries.items()})
    meta = {"source": f"Deligne product of {A.name} and {B.name}"}
    out = CategoryBundle(name or f"{A.name}_x_{B.name}", ring, F, R, meta)
    if verify and F is not None:
        rep = verify_bundle(out)
        if not rep.passed:
            raise IncoherentDataError(f"Deligne product {out.name!r} failed coherence verification")
    return out
