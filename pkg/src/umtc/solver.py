"""Enumeration of braidings on a fixed fusion ring and associator by solving the hexagon equations.

Strategy: every hexagon instance becomes a Laurent polynomial equation in the non-unit R symbols.
Two-term (monomial) equations are combined by integer row reduction into triangular relations
``x^p * (earlier unknowns) = phase``. A depth-first search then repeatedly picks an equation in
which a single unknown is still free, takes all unimodular roots of the resulting univariate
polynomial as candidates and branches on them. Every solution therefore lies in the searched grid;
if at some point no equation bounds a remaining unknown the solver stops with
:class:`SolverIncompleteError` instead of guessing.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._numeric import phase_turns, resolve_tol
from .bundle import CategoryBundle
from .errors import SolverIncompleteError, StructuralError, UnsupportedError
from .fingerprint import Fingerprint, invariant_fingerprint
from .fusion import FusionRing, fp_dimensions
from .modular import modular_dataset, modularity_check
from .tensor_data import FSymbols, RSymbols, check_hexagon, check_pentagon, check_unitarity, hexagon_instances

COEFF_EPS = 1e-12
ROOT_TOL = 1e-6
PRUNE_TOL = 1e-6


@dataclass(frozen=True)
class LaurentEquation:
    """``sum_k coeff_k * prod_u x_u^{exponent}`` = 0."""

    terms: tuple[tuple[complex, tuple[tuple[int, int], ...]], ...]
    origin: tuple = ()

    @property
    def unknowns(self) -> frozenset[int]:
        return frozenset(u for _, mono in self.terms for u, _ in mono)

    def evaluate(self, values: dict[int, complex]) -> complex:
        total = 0j
        for coeff, mono in self.terms:
            term = coeff
            for u, p in mono:
                term *= values[u] ** p
            total += term
        return total

    def univariate(self, values: dict[int, complex], var: int) -> dict[int, complex]:
        """Coefficients by power of ``var`` once every other unknown is substituted."""
        poly: dict[int, complex] = {}
        for coeff, mono in self.terms:
            term = coeff
            power = 0
            for u, p in mono:
                if u == var:
                    power += p
                else:
                    term *= values[u] ** p
            poly[power] = poly.get(power, 0j) + term
        return poly


def _make_equation(terms, origin=()) -> LaurentEquation:
    merged: dict[tuple, complex] = {}
    for coeff, mono in terms:
        acc: dict[int, int] = {}
        for u, p in mono:
            acc[u] = acc.get(u, 0) + p
        key = tuple(sorted((u, p) for u, p in acc.items() if p != 0))
        merged[key] = merged.get(key, 0j) + coeff
    out = tuple((c, m) for m, c in sorted(merged.items()) if abs(c) > COEFF_EPS)
    return LaurentEquation(out, origin)


@dataclass(frozen=True, eq=False)
class HexagonSystem:
    ring: FusionRing
    F: FSymbols
    unknowns: tuple[tuple[int, int, int], ...]
    equations: tuple[LaurentEquation, ...]

    @property
    def count(self) -> int:
        return len(self.equations)

    def unknown_labels(self) -> list[str]:
        L = self.ring.labels
        return [f"R^{{{L[a]},{L[b]}}}_{L[c]}" for a, b, c in self.unknowns]


def build_system(ring: FusionRing, F: FSymbols, check: bool = True) -> HexagonSystem:
    """Hexagon instances of both families as equations in the R symbols with non-unit inputs.

    Channels with a unit input are fixed to 1 (the hexagon itself forces this).
    """
    if F.ring != ring:
        raise StructuralError("F table refers to a different ring")
    if not ring.multiplicity_free:
        raise UnsupportedError("hexagon solving requires a multiplicity-free ring")
    if not np.array_equal(ring.N, ring.N.transpose(1, 0, 2)):
        raise UnsupportedError("a braiding requires a commutative fusion ring")
    F.require_complete()
    if check:
        rep = check_pentagon(F)
        if not rep.passed:
            raise UnsupportedError(f"F table fails the pentagon (residual {rep.max_residual:.3e})")
    unknowns = tuple(ch for ch in ring.channels() if ch[0] != 0 and ch[1] != 0)
    pos = {ch: i for i, ch in enumerate(unknowns)}

    def var(ch, p):
        return ((pos[ch], p),) if ch in pos else ()

    eqs = []
    for a, b, c, d, e, g, fs in hexagon_instances(ring):
        mid = F[(a, c, b, d, e, g)]
        terms = [(mid, var((c, a, e), 1) + var((c, b, g), 1))]
        terms += [(-F[(c, a, b, d, e, f)] * F[(a, b, c, d, f, g)], var((c, f, d), 1)) for f in fs]
        eq = _make_equation(terms, (0, a, b, c, d, e, g))
        if eq.terms:
            eqs.append(eq)
        terms = [(mid, var((a, c, e), -1) + var((b, c, g), -1))]
        terms += [(-F[(c, a, b, d, e, f)] * F[(a, b, c, d, f, g)], var((f, c, d), -1)) for f in fs]
        eq = _make_equation(terms, (1, a, b, c, d, e, g))
        if eq.terms:
            eqs.append(eq)
    return HexagonSystem(ring, F, unknowns, tuple(eqs))


def monomial_relations(system: HexagonSystem) -> tuple[list[LaurentEquation], bool]:
    """Integer row reduction of all two-term equations.

    Returns the reduced relations as equations ``x^k - phase = 0`` and a feasibility flag
    (False when some combination forces ``1 = phase != 1`` or a non-unimodular phase).
    """
    n = len(system.unknowns)
    rows: list[tuple[np.ndarray, complex]] = []
    for eq in system.equations:
        if len(eq.terms) == 1:
            if eq.terms[0][1] == ():
                return [], False
            continue  # coeff * monomial = 0 has no nonzero solution; the search prunes it
        if len(eq.terms) != 2:
            continue
        (c1, m1), (c2, m2) = eq.terms
        vec = np.zeros(n, dtype=np.int64)
        for u, p in m1:
            vec[u] += p
        for u, p in m2:
            vec[u] -= p
        phase = -c2 / c1
        if abs(abs(phase) - 1) > PRUNE_TOL:
            return [], False
        rows.append((vec, phase / abs(phase)))

    reduced = []
    pivot_row = 0
    for col in range(n):
        while True:
            live = [i for i in range(pivot_row, len(rows)) if rows[i][0][col] != 0]
            if not live:
                break
            best = min(live, key=lambda i: abs(rows[i][0][col]))
            rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
            pv, pph = rows[pivot_row]
            if pv[col] < 0:
                pv, pph = -pv, 1 / pph
                rows[pivot_row] = (pv, pph)
            done = True
            for i in range(pivot_row + 1, len(rows)):
                v, ph = rows[i]
                if v[col] != 0:
                    q = v[col] // pv[col]
                    rows[i] = (v - q * pv, ph / pph ** q)
                    if rows[i][0][col] != 0:
                        done = False
            if done:
                reduced.append(rows[pivot_row])
                pivot_row += 1
                break
    for v, ph in rows[pivot_row:]:
        if not np.any(v) and abs(ph - 1) > PRUNE_TOL:
            return [], False
    out = []
    for v, ph in reduced:
        mono = tuple((int(u), int(p)) for u, p in enumerate(v) if p)
        out.append(_make_equation([(1.0 + 0j, mono), (-ph, ())], ("monomial",)))
    return out, True


def _unimodular_roots(poly: dict[int, complex]) -> list[complex] | None:
    """Distinct unimodular roots of a Laurent polynomial; None if it is identically zero."""
    scale = max((abs(c) for c in poly.values()), default=0.0)
    poly = {k: c for k, c in poly.items() if abs(c) > COEFF_EPS * max(1.0, scale)}
    if not poly:
        return None
    lo, hi = min(poly), max(poly)
    if lo == hi:
        return []  # c x^k = 0 forces x = 0
    coeffs = np.zeros(hi - lo + 1, dtype=complex)
    for k, c in poly.items():
        coeffs[hi - k] = c
    roots = np.roots(coeffs)
    out: list[complex] = []
    for z in roots:
        if abs(abs(z) - 1) > ROOT_TOL:
            continue
        z = complex(z) / abs(z)
        for _ in range(3):
            p = np.polyval(coeffs, z)
            dp = np.polyval(np.polyder(coeffs), z)
            if abs(dp) < 1e-14:
                break
            z = z - p / dp
            z /= abs(z)
        if all(abs(z - w) > ROOT_TOL for w in out):
            out.append(z)
    return sorted(out, key=lambda z: (round(float(np.angle(z)) % (2 * np.pi), 9)))


def _search(equations, n, values, out, stats):
    stats["nodes"] += 1
    best = None
    for eq in equations:
        free = eq.unknowns - values.keys()
        if not free:
            if abs(eq.evaluate(values)) > PRUNE_TOL:
                return
            continue
        if len(free) == 1:
            (v,) = free
            roots = _unimodular_roots(eq.univariate(values, v))
            if roots is None:
                continue
            if best is None or len(roots) < len(best[1]):
                best = (v, roots)
                if not roots:
                    return
    if len(values) == n:
        out.append(dict(values))
        return
    if best is None:
        free = sorted(set(range(n)) - values.keys())
        raise SolverIncompleteError(f"no equation bounds unknowns {free} after fixing {sorted(values)}")
    v, roots = best
    for z in roots:
        values[v] = z
        _search(equations, n, values, out, stats)
        del values[v]


def _phase_key(table: RSymbols) -> tuple:
    return tuple((k, phase_turns(v)) for k, v in sorted(table.entries.items()))


@dataclass
class BraidedSolutionSet:
    """Hexagon solutions up to gauge and sector relabeling.

    ``labelled`` keeps one representative per gauge class with the sector labels held fixed, so
    ``len(labelled) >= len(solutions)``; the difference counts structures related only by a
    relabeling (fusion-ring automorphism).
    """

    system: HexagonSystem
    solutions: list[RSymbols]
    fingerprints: list[Fingerprint]
    residuals: list[float]
    labelled: list[RSymbols] = field(default_factory=list)
    labelled_fingerprints: list[Fingerprint] = field(default_factory=list)
    raw_count: int = 0
    search_nodes: int = 0


def solve(system: HexagonSystem, tol: float | None = None) -> BraidedSolutionSet:
    """All unitary solutions of the hexagon system, deduplicated by gauge-invariant fingerprint."""
    tol = resolve_tol(tol)
    ring, F = system.ring, system.F
    relations, feasible = monomial_relations(system)
    raw: list[dict[int, complex]] = []
    stats = {"nodes": 0}
    if feasible:
        _search(list(relations) + list(system.equations), len(system.unknowns), {}, raw, stats)
    dims = fp_dimensions(ring)
    tables = []
    for vals in raw:
        entries = {ch: 1.0 + 0j for ch in ring.channels()}
        for i, ch in enumerate(system.unknowns):
            entries[ch] = vals[i]
        R = RSymbols(ring, entries)
        hexa = check_hexagon(F, R, tol)
        if not hexa.passed or not check_unitarity(F, R, tol).passed:
            continue
        tables.append((_phase_key(R), R, hexa.max_residual))
    tables.sort(key=lambda t: t[0])
    out = BraidedSolutionSet(system, [], [], [], raw_count=len(raw), search_nodes=stats["nodes"])
    for _, R, r in tables:
        lfp = invariant_fingerprint(F, R, dims, relabel=False)
        if lfp in out.labelled_fingerprints:
            continue
        out.labelled.append(R)
        out.labelled_fingerprints.append(lfp)
        fp = invariant_fingerprint(F, R, dims)
        if fp in out.fingerprints:
            continue
        out.solutions.append(R)
        out.fingerprints.append(fp)
        out.residuals.append(r)
    return out


@dataclass
class CatalogEntry:
    R: RSymbols
    F: FSymbols
    f_class: int
    fingerprint: Fingerprint
    residual: float
    twists: np.ndarray
    Stilde: np.ndarray
    modular: bool
    degenerate: tuple = ()

    def bundle(self, name: str) -> CategoryBundle:
        return CategoryBundle(name, self.R.ring, self.F, self.R,
                              {"source": f"hexagon solution, F class {self.f_class}"})


@dataclass
class UBTCCatalog:
    ring: FusionRing
    entries: list[CatalogEntry] = field(default_factory=list)
    labelled_fingerprints: set = field(default_factory=set)

    @property
    def count(self) -> int:
        """Braided structures up to gauge and sector relabeling."""
        return len(self.entries)

    @property
    def count_labelled(self) -> int:
        """Braided structures up to gauge only, sector labels held fixed."""
        return len(self.labelled_fingerprints)

    @property
    def modular_count(self) -> int:
        return sum(e.modular for e in self.entries)

    @property
    def fingerprints(self) -> list[Fingerprint]:
        return [e.fingerprint for e in self.entries]


def dedupe(entries: list[CatalogEntry]) -> list[CatalogEntry]:
    seen, out = set(), []
    for e in entries:
        if e.fingerprint not in seen:
            seen.add(e.fingerprint)
            out.append(e)
    return out


def enumerate_ubtcs(ring: FusionRing, F_list: list[FSymbols], tol: float | None = None) -> UBTCCatalog:
    """Union of hexagon solutions over the supplied associator classes, deduplicated by fingerprint."""
    tol = resolve_tol(tol)
    dims = fp_dimensions(ring)
    entries = []
    labelled = set()
    for i, F in enumerate(F_list):
        result = solve(build_system(ring, F), tol)
        labelled.update(result.labelled_fingerprints)
        for R, fp, r in zip(result.solutions, result.fingerprints, result.residuals):
            md = modular_dataset(ring, R, dims)
            verdict = modularity_check(md, tol)
            entries.append(CatalogEntry(R, F, i, fp, r, md.theta, md.Stilde, verdict.modular, verdict.degenerate))
    return UBTCCatalog(ring, dedupe(entries), labelled)
