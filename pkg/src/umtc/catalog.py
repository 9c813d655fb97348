"""Closed-form builders for the shipped catalog of braided fusion categories.

Run ``python -m umtc.catalog [outdir]`` to regenerate the JSON files under ``umtc/catalog``.
"""
from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

from .bundle import CategoryBundle, catalog_dir, save_bundle
from .fusion import FusionRing, ring_from_rules
from .tensor_data import FSymbols, RSymbols, f_admissible

PHI = (1 + 5 ** 0.5) / 2


def trivial() -> CategoryBundle:
    ring = FusionRing(["1"], [0], np.ones((1, 1, 1), dtype=np.int64))
    return CategoryBundle("trivial", ring, FSymbols(ring, {(0,) * 6: 1.0}), RSymbols(ring, {(0, 0, 0): 1.0}),
                          {"source": "Vec"})


def cyclic_ring(n: int, names=None) -> FusionRing:
    names = names or ["1"] + ["g" if a == 1 else f"g{a}" for a in range(1, n)]
    N = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            N[a, b, (a + b) % n] = 1
    return FusionRing(names, [(-a) % n for a in range(n)], N)


def pointed_cyclic(n: int, k: int, name: str | None = None, names=None) -> CategoryBundle:
    """Braided pointed category on Z_n with quadratic form ``theta_a = exp(pi i k a^2 / n)``.

    ``k`` is taken mod ``2n``; for odd ``n`` it must be even. The associator is the 3-cocycle
    ``exp(pi i k a (b + c - [b + c]) / n)`` and ``R^{ab} = exp(pi i k a b / n)``.
    """
    if not 1 <= n <= 8:
        raise ValueError("pointed_cyclic supports 1 <= n <= 8")
    k %= 2 * n
    if n % 2 and k % 2:
        raise ValueError("odd n requires even k")
    ring = cyclic_ring(n, names)
    F = {(a, b, c, d, e, f): np.exp(1j * np.pi * k * a * (b + c - (b + c) % n) / n)
         for (a, b, c, d, e, f) in f_admissible(ring)}
    R = {(a, b, c): np.exp(1j * np.pi * k * a * b / n) for (a, b, c) in ring.channels()}
    return CategoryBundle(name or f"z{n}_k{k}", ring, FSymbols(ring, F), RSymbols(ring, R),
                          {"source": f"pointed Z{n}, quadratic form exp(pi i {k} a^2/{n})"})


def rep_z2() -> CategoryBundle:
    return pointed_cyclic(2, 0, "rep_z2", ["1", "g"])


def svec() -> CategoryBundle:
    return pointed_cyclic(2, 2, "svec", ["1", "f"])


def semion() -> CategoryBundle:
    return pointed_cyclic(2, 1, "semion", ["1", "s"])


def antisemion() -> CategoryBundle:
    return pointed_cyclic(2, 3, "antisemion", ["1", "s"])


def ising_ring() -> FusionRing:
    return ring_from_rules(["1", "sigma", "psi"],
                           {("sigma", "sigma"): ["1", "psi"], ("sigma", "psi"): ["sigma"], ("psi", "psi"): ["1"]})


def ising_f(kappa: int, ring: FusionRing | None = None) -> FSymbols:
    """Ising-type associator; ``kappa`` is the Frobenius-Schur indicator of sigma."""
    if kappa not in (1, -1):
        raise ValueError("kappa must be +1 or -1")
    ring = ring or ising_ring()
    s, p = 1, 2
    F = {key: 1.0 for key in f_admissible(ring)}
    for e in (0, p):
        for f in (0, p):
            F[(s, s, s, s, e, f)] = kappa / np.sqrt(2) * (-1 if e == f == p else 1)
    F[(s, p, s, p, s, s)] = -1.0
    F[(p, s, p, s, s, s)] = -1.0
    return FSymbols(ring, F)


def ising_kappa(nu: int) -> int:
    return 1 if nu % 8 in (1, 7) else -1


def ising(nu: int = 1) -> CategoryBundle:
    """Ising-type category with ``theta_sigma = exp(2 pi i nu / 16)``, ``nu`` odd."""
    if nu % 2 == 0:
        raise ValueError("nu must be odd")
    nu %= 16
    kappa = ising_kappa(nu)
    ring = ising_ring()
    s, p = 1, 2
    R = {ch: 1.0 + 0j for ch in ring.channels()}
    R[(s, s, 0)] = kappa * np.exp(-1j * np.pi * nu / 8)
    R[(s, s, p)] = kappa * np.exp(3j * np.pi * nu / 8)
    R[(s, p, s)] = R[(p, s, s)] = np.exp(-1j * np.pi * nu / 2)
    R[(p, p, 0)] = -1.0
    sign = "+" if kappa > 0 else "-"
    return CategoryBundle(f"ising_nu{nu}", ring, ising_f(kappa, ring), RSymbols(ring, R),
                          {"source": f"Ising-type, kappa={sign}1, theta_sigma=exp(2 pi i {nu}/16)"})


def fibonacci_ring() -> FusionRing:
    return ring_from_rules(["1", "tau"], {("tau", "tau"): ["1", "tau"]})


def fibonacci_f(ring: FusionRing | None = None) -> FSymbols:
    ring = ring or fibonacci_ring()
    t = 1
    F = {key: 1.0 for key in f_admissible(ring)}
    F[(t, t, t, t, 0, 0)] = 1 / PHI
    F[(t, t, t, t, 0, t)] = F[(t, t, t, t, t, 0)] = PHI ** -0.5
    F[(t, t, t, t, t, t)] = -1 / PHI
    return FSymbols(ring, F)


def fibonacci(reverse: bool = False) -> CategoryBundle:
    ring = fibonacci_ring()
    t = 1
    R = {ch: 1.0 + 0j for ch in ring.channels()}
    R[(t, t, 0)] = np.exp(-4j * np.pi / 5)
    R[(t, t, t)] = np.exp(3j * np.pi / 5)
    if reverse:
        R = {k: v.conjugate() for k, v in R.items()}
    name = "fibonacci_rev" if reverse else "fibonacci"
    theta = "exp(-4 pi i/5)" if reverse else "exp(4 pi i/5)"
    return CategoryBundle(name, ring, fibonacci_f(ring), RSymbols(ring, R),
                          {"source": f"Fibonacci, theta_tau={theta}"})


def catalog() -> dict[str, CategoryBundle]:
    """Every shipped bundle keyed by file stem."""
    out = {
        "trivial": trivial(),
        "rep_z2": rep_z2(),
        "svec": svec(),
        "semion": semion(),
        "antisemion": antisemion(),
        "z3_k2": pointed_cyclic(3, 2),
        "z4_k1": pointed_cyclic(4, 1),
        "fibonacci": fibonacci(),
        "fibonacci_rev": fibonacci_rev(),
    }
    k_plus = ising(1)
    k_minus = ising(3)
    out["ising_k+"] = CategoryBundle("ising_k+", k_plus.ring, k_plus.F, k_plus.R, k_plus.metadata)
    out["ising_k-"] = CategoryBundle("ising_k-", k_minus.ring, k_minus.F, k_minus.R, k_minus.metadata)
    for nu in range(1, 16, 2):
        out[f"ising_nu{nu}"] = ising(nu)
    return out


def fibonacci_rev() -> CategoryBundle:
    return fibonacci(reverse=True)


def write_catalog(outdir=None) -> list[Path]:
    outdir = Path(outdir) if outdir is not None else catalog_dir()
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for stem, bundle in catalog().items():
        path = outdir / f"{stem}.json"
        save_bundle(bundle, path)
        written.append(path)
    return written


if __name__ == "__main__":
    for p in write_catalog(sys.argv[1] if len(sys.argv) > 1 else None):
        print(p)
