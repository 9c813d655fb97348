"""CategoryBundle: a validated fusion ring with optional F and R tables, plus JSON I/O."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Iterable

import jsonschema
import numpy as np

from ._numeric import clean_float, default_tol
from .errors import BundleParseError, StructuralError, UMTCError, ValidationError
from .fusion import DimensionVector, FusionRing, Violation, fp_dimensions, validate_ring
from .modular import ModularDataset, modular_dataset, modularity_check
from .tensor_data import FSymbols, RSymbols, check_hexagon, check_pentagon, check_unitarity

SCHEMA_ID = "umtc-bundle/1"


@dataclass(frozen=True, eq=False)
class CategoryBundle:
    """A fusion ring (validated on construction) with optional associator and braiding."""

    name: str
    ring: FusionRing
    F: FSymbols | None = None
    R: RSymbols | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        validate_ring(self.ring).raise_if_invalid()
        for table in (self.F, self.R):
            if table is not None and table.ring != self.ring:
                raise StructuralError("table refers to a different fusion ring")
        if self.R is not None and self.F is None:
            raise StructuralError("an R table needs a companion F table")

    @property
    def rank(self) -> int:
        return self.ring.rank

    @property
    def labels(self) -> tuple[str, ...]:
        return self.ring.labels

    @property
    def tol(self) -> float:
        return float(self.metadata.get("tol", default_tol()))

    @property
    def braided(self) -> bool:
        return self.R is not None

    @cached_property
    def dims(self) -> DimensionVector:
        return fp_dimensions(self.ring, self.tol)

    @cached_property
    def modular_data(self) -> ModularDataset | None:
        if self.R is None:
            return None
        return modular_dataset(self.ring, self.R, self.dims, self.tol)

    @cached_property
    def is_modular(self) -> bool:
        md = self.modular_data
        return md is not None and modularity_check(md, self.tol).modular

    def indices(self, labels: Iterable) -> tuple[int, ...]:
        return tuple(sorted({self.ring.index(x) for x in labels}))

    def with_R(self, R: RSymbols, name: str | None = None) -> "CategoryBundle":
        return CategoryBundle(name or self.name, self.ring, self.F, R, dict(self.metadata))

    def extract(self, members: Iterable[int], name: str | None = None) -> "CategoryBundle":
        """Standalone bundle for a fusion-closed member set, relabeled in ascending index order."""
        members = sorted(set(int(m) for m in members))
        if not members or members[0] != 0:
            raise StructuralError("a subcategory must contain the unit")
        pos = {m: i for i, m in enumerate(members)}
        N = self.ring.N[np.ix_(members, members, members)]
        for a in members:
            for b in members:
                if any(c not in pos for c in self.ring.fuse(a, b)):
                    raise StructuralError(f"member set {members} is not closed under fusion")
        dual = [pos[self.ring.dual[m]] for m in members]
        ring = FusionRing([self.ring.labels[m] for m in members], dual, N)
        F = R = None
        if self.F is not None:
            F = FSymbols(ring, {tuple(pos[i] for i in k): v for k, v in self.F.entries.items()
                                if all(i in pos for i in k)})
        if self.R is not None:
            R = RSymbols(ring, {tuple(pos[i] for i in k): v for k, v in self.R.entries.items()
                                if all(i in pos for i in k)})
        meta = {"source": f"subcategory of {self.name}"}
        if "tol" in self.metadata:
            meta["tol"] = self.metadata["tol"]
        return CategoryBundle(name or f"{self.name}[{','.join(ring.labels)}]", ring, F, R, meta)


@dataclass
class CoherenceReport:
    ring: object
    pentagon: object = None
    hexagon: object = None
    unitarity: object = None

    @property
    def passed(self) -> bool:
        return all(x is None or x.passed for x in (self.pentagon, self.hexagon, self.unitarity)) and self.ring.valid


def verify_bundle(bundle: CategoryBundle) -> CoherenceReport:
    """Ring axioms plus pentagon, hexagon and unitarity for whichever tables are present."""
    rep = CoherenceReport(validate_ring(bundle.ring))
    if bundle.F is not None:
        rep.pentagon = check_pentagon(bundle.F, bundle.tol)
        rep.unitarity = check_unitarity(bundle.F, bundle.R, bundle.tol)
    if bundle.R is not None:
        rep.hexagon = check_hexagon(bundle.F, bundle.R, bundle.tol)
    return rep


# --- serialization -------------------------------------------------------------------------

def _cx(z) -> dict:
    z = complex(z)
    return {"re": clean_float(z.real, 15), "im": clean_float(z.imag, 15)}


def _uncx(obj) -> complex:
    return complex(float(obj["re"]), float(obj["im"]))


def exact_phase(z: complex, max_den: int = 240, tol: float = 1e-9) -> tuple[int, int] | None:
    """``z = exp(2 pi i p/q)`` as ``(p, q)`` when a small denominator reproduces ``z``."""
    z = complex(z)
    if abs(abs(z) - 1) > tol:
        return None
    t = Fraction(float(np.angle(z) / (2 * np.pi)) % 1.0).limit_denominator(max_den)
    if abs(np.exp(2j * np.pi * float(t)) - z) > tol:
        return None
    return (t.numerator % t.denominator, t.denominator) if t.denominator > 1 else (0, 1)


def bundle_to_dict(bundle: CategoryBundle) -> dict:
    ring = bundle.ring
    L = ring.labels
    doc = {
        "schema": SCHEMA_ID,
        "name": bundle.name,
        "labels": list(L),
        "unit": L[0],
        "dual": {L[a]: L[ring.dual[a]] for a in range(ring.rank)},
        "fusion": [[L[a], L[b], L[c], int(ring.N[a, b, c])] for a, b, c in ring.channels()],
    }
    if bundle.F is not None:
        doc["F"] = [[*(L[i] for i in k), _cx(bundle.F.entries[k])] for k in sorted(bundle.F.entries)]
    if bundle.R is not None:
        doc["R"] = [[*(L[i] for i in k), _cx(bundle.R.entries[k])] for k in sorted(bundle.R.entries)]
    meta = dict(bundle.metadata)
    if bundle.R is not None:
        phases = []
        for k in sorted(bundle.R.entries):
            p = exact_phase(bundle.R.entries[k])
            if p is not None:
                phases.append([*(L[i] for i in k), p[0], p[1]])
        meta["phases"] = phases
    if meta:
        doc["metadata"] = meta
    return doc


def dumps_bundle(bundle: CategoryBundle) -> str:
    return json.dumps(bundle_to_dict(bundle), indent=1, ensure_ascii=False, sort_keys=False) + "\n"


def save_bundle(bundle: CategoryBundle, path) -> None:
    Path(path).write_text(dumps_bundle(bundle), encoding="utf-8")


_SCHEMA = None


def bundle_schema() -> dict:
    global _SCHEMA
    if _SCHEMA is None:
        _SCHEMA = json.loads(resources.files("umtc").joinpath("schema/bundle.schema.json").read_text("utf-8"))
    return _SCHEMA


def bundle_from_dict(doc) -> CategoryBundle:
    """Validate ``doc`` against the schema and the ring axioms, then build the bundle."""
    if not isinstance(doc, dict):
        raise BundleParseError("bundle document must be a JSON object")
    try:
        jsonschema.validate(doc, bundle_schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path)
        missing = ""
        if exc.validator == "required":
            missing = exc.message.split("'")[1]
        field_name = missing or where or "schema"
        raise ValidationError(f"schema violation at {field_name!r}: {exc.message}",
                              [Violation(field_name, (), exc.message)]) from None

    labels = doc["labels"]
    if len(set(labels)) != len(labels):
        raise ValidationError("duplicate labels", [Violation("labels", ())])
    pos = {x: i for i, x in enumerate(labels)}

    def idx(x, where):
        try:
            return pos[x]
        except KeyError:
            raise ValidationError(f"undeclared label {x!r} in {where}", [Violation(where, (x,), "undeclared label")]) from None

    if doc["unit"] != labels[0]:
        raise ValidationError("the unit must be the first label", [Violation("unit", (doc["unit"],))])
    r = len(labels)
    dual = [None] * r
    for a, b in doc["dual"].items():
        dual[idx(a, "dual")] = idx(b, "dual")
    if any(x is None for x in dual):
        missing = [labels[i] for i, x in enumerate(dual) if x is None]
        raise ValidationError(f"dual map misses {missing}", [Violation("dual", tuple(missing), "missing")])
    N = np.zeros((r, r, r), dtype=np.int64)
    for a, b, c, n in doc["fusion"]:
        N[idx(a, "fusion"), idx(b, "fusion"), idx(c, "fusion")] = n
    try:
        ring = FusionRing(labels, dual, N)
        validate_ring(ring).raise_if_invalid()
        F = R = None
        if "F" in doc:
            F = FSymbols(ring, {tuple(idx(x, "F") for x in row[:6]): _uncx(row[6]) for row in doc["F"]})
            F.require_complete()
        if "R" in doc:
            R = RSymbols(ring, {tuple(idx(x, "R") for x in row[:3]): _uncx(row[3]) for row in doc["R"]})
            R.require_complete()
        meta = dict(doc.get("metadata", {}))
        meta.pop("phases", None)
        return CategoryBundle(doc["name"], ring, F, R, meta)
    except ValidationError:
        raise
    except UMTCError as exc:
        raise ValidationError(str(exc), [Violation(type(exc).__name__, (), str(exc))]) from exc


def loads_bundle(text: str) -> CategoryBundle:
    if not text.strip():
        raise BundleParseError("empty bundle file")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleParseError(f"invalid JSON: {exc}") from None
    return bundle_from_dict(doc)


def catalog_dir() -> Path:
    return Path(str(resources.files("umtc").joinpath("catalog")))


def resolve_bundle_path(path) -> Path:
    """A filesystem path, or a catalog entry given as ``name``, ``name.json`` or ``catalog/name.json``."""
    p = Path(path)
    if p.is_file():
        return p
    name = p.name if p.suffix == ".json" else p.name + ".json"
    cand = catalog_dir() / name
    if cand.is_file():
        return cand
    raise FileNotFoundError(f"no bundle file or catalog entry named {str(path)!r}")


def load_bundle(path) -> CategoryBundle:
    p = resolve_bundle_path(path)
    return loads_bundle(p.read_text(encoding="utf-8"))


def catalog_names() -> list[str]:
    return sorted(p.stem for p in catalog_dir().glob("*.json"))
