"""Fusion rings: structural checks, axiom validation, Frobenius-Perron dimensions."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ._numeric import resolve_tol
from .errors import NumericalError, StructuralError, ValidationError

MAX_POWER_ITERATIONS = 100_000


@dataclass(frozen=True)
class SectorLabel:
    id: str
    index: int


@dataclass(frozen=True, eq=False)
class FusionRing:
    """Based ring with labels ``labels`` (index 0 is the unit), duality ``dual`` and
    structure constants ``N[a, b, c]`` = multiplicity of ``c`` in ``a x b``.

    Construction only performs structural checks; use :func:`validate_ring` for the axioms.
    """

    labels: tuple[str, ...]
    dual: tuple[int, ...]
    N: np.ndarray

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        r = len(labels)
        if r == 0:
            raise StructuralError("a fusion ring needs at least the unit label")
        if len(set(labels)) != r:
            raise StructuralError(f"duplicate sector labels in {labels}")
        N = np.asarray(self.N)
        if N.shape != (r, r, r):
            raise StructuralError(f"fusion tensor has shape {N.shape}, expected {(r, r, r)}")
        if not np.all(np.equal(np.mod(N, 1), 0)):
            raise StructuralError("fusion coefficients must be integers")
        N = N.astype(np.int64)
        if np.any(N < 0):
            idx = tuple(int(i) for i in np.argwhere(N < 0)[0])
            raise StructuralError(f"negative fusion coefficient at {idx}")
        N.setflags(write=False)
        object.__setattr__(self, "N", N)
        dual = tuple(int(x) for x in self.dual)
        if len(dual) != r:
            raise StructuralError(f"dual map has length {len(dual)}, expected {r}")
        if any(not 0 <= x < r for x in dual):
            raise StructuralError(f"dual map {dual} has out-of-range entries")
        object.__setattr__(self, "dual", dual)

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def unit(self) -> int:
        return 0

    @property
    def sectors(self) -> list[SectorLabel]:
        return [SectorLabel(x, i) for i, x in enumerate(self.labels)]

    def index(self, label) -> int:
        """Index of ``label``; integers are accepted as indices."""
        if isinstance(label, (int, np.integer)):
            if not 0 <= int(label) < self.rank:
                raise KeyError(label)
            return int(label)
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(label) from None

    @cached_property
    def _products(self) -> dict[tuple[int, int], tuple[int, ...]]:
        r = self.rank
        return {(a, b): tuple(int(c) for c in np.nonzero(self.N[a, b])[0]) for a in range(r) for b in range(r)}

    def fuse(self, a: int, b: int) -> tuple[int, ...]:
        """Fusion channels ``c`` with ``N[a, b, c] > 0``, ascending; labels are accepted too."""
        try:
            return self._products[(a, b)]
        except KeyError:
            return self._products[(self.index(a), self.index(b))]

    @property
    def multiplicity_free(self) -> bool:
        return bool(np.all(self.N <= 1))

    @property
    def is_pointed(self) -> bool:
        return all(len(self.fuse(a, b)) == 1 and self.N[a, b, self.fuse(a, b)[0]] == 1
                   for a in range(self.rank) for b in range(self.rank))

    def fusion_matrix(self, a: int) -> np.ndarray:
        """``(N_a)_{bc} = N[a, b, c]``."""
        return np.array(self.N[a], dtype=float)

    def channels(self) -> list[tuple[int, int, int]]:
        """All admissible vertices ``(a, b, c)``, lexicographic."""
        return [(a, b, c) for a in range(self.rank) for b in range(self.rank) for c in self.fuse(a, b)]

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return self.labels == other.labels and self.dual == other.dual and np.array_equal(self.N, other.N)

    def __hash__(self):
        return hash((self.labels, self.dual, self.N.tobytes()))

    def __repr__(self):
        return f"FusionRing(labels={self.labels!r})"


def ring_from_rules(labels: Sequence[str], rules: dict[tuple[str, str], Iterable[str]],
                    dual: dict[str, str] | None = None) -> FusionRing:
    """Build a ring from products given as ``{(a, b): [c, ...]}``.

    Products involving the unit may be omitted; rules are symmetrized. Without an explicit
    ``dual`` every sector is taken self-dual.
    """
    labels = tuple(labels)
    pos = {x: i for i, x in enumerate(labels)}
    r = len(labels)
    N = np.zeros((r, r, r), dtype=np.int64)
    for a in range(r):
        N[0, a, a] = N[a, 0, a] = 1
    for (a, b), outs in rules.items():
        ia, ib = pos[a], pos[b]
        N[ia, ib, :] = 0
        N[ib, ia, :] = 0
        for c in outs:
            N[ia, ib, pos[c]] += 1
            if ia != ib:
                N[ib, ia, pos[c]] += 1
    if dual is None:
        duals = tuple(range(r))
    else:
        duals = tuple(pos[dual.get(x, x)] for x in labels)
    return FusionRing(labels, duals, N)


@dataclass(frozen=True)
class Violation:
    axiom: str
    indices: tuple
    detail: str = ""

    def __str__(self):
        return f"{self.axiom} violated at {self.indices}" + (f": {self.detail}" if self.detail else "")


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def raise_if_invalid(self, what="fusion ring"):
        if self.violations:
            shown = "; ".join(str(v) for v in self.violations[:5])
            more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
            raise ValidationError(f"invalid {what}: {shown}{more}", self.violations)


def validate_ring(ring: FusionRing) -> ValidationReport:
    """Check the unit, duality, associativity, Frobenius reciprocity and commutativity axioms.

    Every violated instance is listed; an empty report means the ring is valid.
    """
    N = ring.N
    r = ring.rank
    dual = ring.dual
    out: list[Violation] = []
    eye = np.eye(r, dtype=np.int64)

    for b in range(r):
        for c in range(r):
            if N[0, b, c] != eye[b, c]:
                out.append(Violation("unit", (0, b, c), f"N[0,{b},{c}]={N[0, b, c]}"))
            if N[b, 0, c] != eye[b, c]:
                out.append(Violation("unit", (b, 0, c), f"N[{b},0,{c}]={N[b, 0, c]}"))

    if dual[0] != 0:
        out.append(Violation("dual", (0,), "dual of the unit is not the unit"))
    for a in range(r):
        if dual[dual[a]] != a:
            out.append(Violation("dual", (a,), "dual is not an involution"))
    for a in range(r):
        for b in range(r):
            want = 1 if b == dual[a] else 0
            if N[a, b, 0] != want:
                out.append(Violation("dual", (a, b, 0), f"N[{a},{b},0]={N[a, b, 0]}, expected {want}"))

    # (a b) c versus a (b c), compared through every outcome l
    left = np.einsum("abm,mcl->abcl", N, N)
    right = np.einsum("bcm,aml->abcl", N, N)
    for a, b, c, l in np.argwhere(left != right):
        out.append(Violation("associativity", (int(a), int(b), int(c), int(l)),
                             f"{left[a, b, c, l]} != {right[a, b, c, l]}"))

    dual_arr = np.array(dual)
    for a in range(r):
        for b in range(r):
            for c in range(r):
                n = N[a, b, c]
                if n != N[dual_arr[a], c, b] or n != N[c, dual_arr[b], a]:
                    out.append(Violation("frobenius", (a, b, c)))

    for a, b, c in np.argwhere(N != N.transpose(1, 0, 2)):
        if a < b:
            out.append(Violation("commutativity", (int(a), int(b), int(c))))
    return ValidationReport(out)


@dataclass(frozen=True, eq=False)
class DimensionVector:
    d: np.ndarray
    Dsq: float

    @property
    def D(self) -> float:
        return float(np.sqrt(self.Dsq))

    def __iter__(self):
        return iter(self.d)

    def __getitem__(self, i):
        return self.d[i]

    def __len__(self):
        return len(self.d)


def _perron_vector(M: np.ndarray, tol: float) -> np.ndarray:
    x = np.ones(M.shape[0])
    x /= np.linalg.norm(x)
    for _ in range(MAX_POWER_ITERATIONS):
        y = M @ x
        y /= np.linalg.norm(y)
        if np.max(np.abs(y - x)) < tol:
            return y
        x = y
    raise NumericalError(f"power iteration did not converge within {MAX_POWER_ITERATIONS} iterations")


def fp_dimensions(ring: FusionRing, tol: float | None = None) -> DimensionVector:
    """Frobenius-Perron dimensions.

    The dimension vector is the common Perron eigenvector of all fusion matrices. It is found by
    power iteration on their sum, which is entrywise positive for a valid ring (so the iteration
    converges even where a single ``N_a`` is periodic, e.g. Ising's ``N_sigma``).
    """
    tol = resolve_tol(tol)
    M = np.sum(ring.N, axis=0).astype(float)
    v = _perron_vector(M, tol * 1e-4)
    d = v / v[0]
    residual = max_multiplicativity_residual(ring, d)
    if residual > max(tol, 1e-9) * max(1.0, float(np.max(d)) ** 2):
        raise NumericalError(f"Frobenius-Perron vector fails multiplicativity (residual {residual:.3e})")
    d.setflags(write=False)
    return DimensionVector(d, float(np.sum(d ** 2)))


def max_multiplicativity_residual(ring: FusionRing, d) -> float:
    d = np.asarray(d, dtype=float)
    lhs = np.outer(d, d)
    rhs = np.einsum("abc,c->ab", ring.N, d)
    return float(np.max(np.abs(lhs - rhs)))


def global_dimension(dims: DimensionVector) -> float:
    """Sum of squared dimensions."""
    return float(np.sum(np.asarray(dims.d) ** 2))
