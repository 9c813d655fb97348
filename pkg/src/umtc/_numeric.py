from __future__ import annotations

import os

DEFAULT_TOL = 1e-9


def default_tol() -> float:
    """Global equality tolerance; the ``UMTC_TOL`` environment variable overrides it."""
    raw = os.environ.get("UMTC_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        return DEFAULT_TOL
    return tol if tol > 0 else DEFAULT_TOL


def resolve_tol(tol: float | None) -> float:
    return default_tol() if tol is None else tol


def clean_float(x: float, digits: int = 12) -> float:
    """Round and normalize negative zero so that serialized output is stable."""
    y = round(float(x), digits)
    return 0.0 if y == 0 else y


def round_complex(z: complex, digits: int = 6) -> tuple[float, float]:
    z = complex(z)
    return (clean_float(z.real, digits), clean_float(z.imag, digits))


def phase_turns(z: complex, digits: int = 6) -> float:
    """Argument of ``z`` in turns, normalized to [0, 1)."""
    import cmath

    t = cmath.phase(complex(z)) / (2 * cmath.pi)
    t = round(t % 1.0, digits)
    return 0.0 if t >= 1.0 else clean_float(t, digits)
