"""Machine-readable report documents emitted by the command line interface."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ._numeric import clean_float

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2


def _encode(obj):
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": clean_float(obj.real), "im": clean_float(obj.imag)}
    if isinstance(obj, (float, np.floating)):
        return clean_float(obj)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [_encode(x) for x in obj.tolist()] if obj.dtype != complex else [_encode(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(x) for x in obj]
    return obj


@dataclass
class ReportDocument:
    """Outcome of one command.

    ``matrices`` hold row-major nested lists of ``{re, im}`` objects; ``exit_code`` is 0 exactly
    when every verdict passed, unless an input error set it to 2.
    """

    command: list[str]
    verdicts: dict[str, bool] = field(default_factory=dict)
    matrices: dict[str, Any] = field(default_factory=dict)
    residuals: dict[str, float] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    data: dict[str, Any] = field(default_factory=dict)
    error: str | None = None
    input_error: bool = False

    @property
    def exit_code(self) -> int:
        if self.input_error:
            return EXIT_INPUT_ERROR
        return EXIT_PASS if all(self.verdicts.values()) else EXIT_FAIL

    def add_matrix(self, name: str, M) -> None:
        M = np.asarray(M, dtype=complex)
        self.matrices[name] = [[_encode(complex(z)) for z in row] for row in np.atleast_2d(M)]

    def to_dict(self) -> dict:
        doc = {
            "command": list(self.command),
            "verdicts": {k: bool(v) for k, v in self.verdicts.items()},
            "matrices": self.matrices,
            "residuals": _encode(self.residuals),
            "witnesses": _encode(self.witnesses),
            "data": _encode(self.data),
            "exit_code": self.exit_code,
        }
        if self.error is not None:
            doc["error"] = self.error
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        doc = json.loads(text)
        rep = cls(doc["command"], doc["verdicts"], doc["matrices"], doc["residuals"], doc["witnesses"],
                  doc["data"], doc.get("error"), doc["exit_code"] == EXIT_INPUT_ERROR)
        if rep.exit_code != doc["exit_code"]:
            raise ValueError("exit code inconsistent with verdicts")
        return rep


def matrix_from_report(rows) -> np.ndarray:
    return np.array([[complex(z["re"], z["im"]) for z in row] for row in rows])
