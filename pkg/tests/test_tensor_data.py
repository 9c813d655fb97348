import numpy as np
import pytest

from oracles import admissible_count
from umtc import catalog as cat
from umtc.errors import IncompleteTableError, InvalidGaugeError, StructuralError, UnsupportedError
from umtc.fingerprint import invariant_fingerprint
from umtc.fusion import fp_dimensions
from umtc.modular import twists
from umtc.tensor_data import (FSymbols, GaugeTransform, RSymbols, apply_gauge, check_hexagon, check_pentagon,
                              check_unitarity, constant_f_symbols, f_admissible, frobenius_schur_indicators,
                              identity_gauge, random_gauge, reverse_braiding)

TOL = 1e-9


def _with(table, key, value):
    entries = dict(table.entries)
    entries[key] = value
    return type(table)(table.ring, entries)


def test_admissible_count_matches_oracle(shipped):
    for b in shipped.values():
        assert len(f_admissible(b.ring)) == admissible_count(b.ring.N)


def test_ising_pentagon_both_kappa():
    for kappa in (1, -1):
        rep = check_pentagon(cat.ising_f(kappa))
        assert rep.passed and rep.max_residual < TOL


def test_flipped_ising_entry_fails_pentagon():
    F = cat.ising_f(1)
    bad = _with(F, (1, 2, 1, 2, 1, 1), 1.0)
    rep = check_pentagon(bad)
    assert not rep.passed
    assert rep.max_residual > 0.5
    assert rep.worst is not None


def test_trivial_pentagon_exact():
    rep = check_pentagon(cat.trivial().F)
    assert rep.max_residual == 0.0


def test_missing_entry_is_incomplete_not_residual():
    F = cat.fibonacci_f()
    entries = dict(F.entries)
    entries.pop((1, 1, 1, 1, 1, 1))
    with pytest.raises(IncompleteTableError):
        check_pentagon(FSymbols(F.ring, entries))
    R = cat.fibonacci().R
    r_entries = dict(R.entries)
    r_entries.pop((1, 1, 0))
    with pytest.raises(IncompleteTableError):
        check_hexagon(F, RSymbols(R.ring, r_entries))


def test_non_admissible_key_rejected():
    F = cat.fibonacci_f()
    with pytest.raises(StructuralError):
        FSymbols(F.ring, {**F.entries, (0, 1, 1, 1, 0, 1): 1.0})


def test_hexagon_ising_and_fibonacci():
    assert check_hexagon(cat.ising(1).F, cat.ising(1).R).max_residual < TOL
    assert check_hexagon(cat.fibonacci().F, cat.fibonacci().R).max_residual < TOL


def test_shipped_ising_values():
    R = cat.ising(1).R
    assert R[(1, 1, 0)] == pytest.approx(np.exp(-1j * np.pi / 8))
    assert R[(1, 1, 2)] == pytest.approx(np.exp(3j * np.pi / 8))
    assert R[(2, 2, 0)] == pytest.approx(-1)
    assert R[(1, 2, 1)] == pytest.approx(-1j)
    assert R[(2, 1, 1)] == pytest.approx(-1j)


def test_wrong_psi_braiding_fails_hexagon():
    b = cat.ising(1)
    rep = check_hexagon(b.F, _with(b.R, (2, 2, 0), 1.0))
    assert not rep.passed


def _s3_ring():
    import itertools
    from umtc.fusion import FusionRing
    perms = sorted(itertools.permutations(range(3)), key=lambda p: p != (0, 1, 2))
    idx = {p: i for i, p in enumerate(perms)}
    N = np.zeros((6, 6, 6), dtype=int)
    for p in perms:
        for q in perms:
            N[idx[p], idx[q], idx[tuple(p[q[i]] for i in range(3))]] = 1
    inv = [idx[tuple(int(x) for x in np.argsort(p))] for p in perms]
    return FusionRing([str(i) for i in range(6)], inv, N)


def test_hexagon_needs_commutative_ring():
    ring = _s3_ring()
    F = constant_f_symbols(ring)
    assert check_pentagon(F).passed
    R = RSymbols(ring, {ch: 1.0 for ch in ring.channels()})
    with pytest.raises(UnsupportedError):
        check_hexagon(F, R)


def test_unitarity_catalog_and_scaled_r(shipped):
    for b in shipped.values():
        assert check_unitarity(b.F, b.R).passed, b.name
    b = cat.fibonacci()
    bad = _with(b.R, (1, 1, 1), 2 * b.R[(1, 1, 1)])
    rep = check_unitarity(b.F, bad)
    assert not rep.passed
    assert rep.r_worst == (1, 1, 1)
    assert check_unitarity(cat.trivial().F, cat.trivial().R).max_residual == 0.0


def test_identity_gauge_is_noop():
    b = cat.ising(3)
    F2, R2 = apply_gauge(b.F, b.R, identity_gauge(b.ring))
    assert F2 == b.F and R2 == b.R


@pytest.mark.parametrize("nu", [1, 3])
def test_random_gauges_preserve_coherence_and_fingerprint(nu):
    b = cat.ising(nu)
    dims = fp_dimensions(b.ring)
    fp = invariant_fingerprint(b.F, b.R, dims)
    fp_lab = invariant_fingerprint(b.F, b.R, dims, relabel=False)
    rng = np.random.default_rng(2024 + nu)
    for _ in range(100):
        F2, R2 = apply_gauge(b.F, b.R, random_gauge(b.ring, rng))
        assert check_pentagon(F2).max_residual < TOL
        assert check_hexagon(F2, R2).max_residual < TOL
        assert check_unitarity(F2, R2).passed
        assert invariant_fingerprint(F2, R2, dims) == fp
        assert invariant_fingerprint(F2, R2, dims, relabel=False) == fp_lab


def test_gauge_rejections():
    ring = cat.fibonacci_ring()
    F, R = cat.fibonacci().F, cat.fibonacci().R
    g = dict(identity_gauge(ring).entries)
    g[(0, 1, 1)] = 1j
    with pytest.raises(InvalidGaugeError):
        apply_gauge(F, R, GaugeTransform(g))
    g = dict(identity_gauge(ring).entries)
    g[(1, 1, 1)] = 0.0
    with pytest.raises(InvalidGaugeError):
        apply_gauge(F, R, GaugeTransform(g))


def test_reverse_braiding():
    b = cat.fibonacci()
    rev = reverse_braiding(b.R)
    assert reverse_braiding(rev) == b.R
    assert check_hexagon(b.F, rev).passed
    dims = fp_dimensions(b.ring)
    np.testing.assert_allclose(twists(b.ring, dims, rev), np.conj(twists(b.ring, dims, b.R)), atol=1e-12)
    sym = cat.rep_z2().R
    assert reverse_braiding(sym) == sym


def test_reverse_changes_fingerprint():
    b = cat.ising(1)
    assert invariant_fingerprint(b.F, b.R) != invariant_fingerprint(b.F, reverse_braiding(b.R))


def test_rep_z2_vs_svec_fingerprints():
    a, s = cat.rep_z2(), cat.svec()
    assert invariant_fingerprint(a.F, a.R) != invariant_fingerprint(s.F, s.R)
    assert invariant_fingerprint(a.F, a.R).twists == (0.0, 0.0)
    assert invariant_fingerprint(s.F, s.R).twists == (0.0, 0.5)


def test_frobenius_schur_indicators():
    for kappa in (1, -1):
        F = cat.ising_f(kappa)
        nu = frobenius_schur_indicators(F, fp_dimensions(F.ring).d)
        np.testing.assert_allclose(nu, [1, kappa, 1], atol=1e-12)
    F = cat.semion().F
    np.testing.assert_allclose(frobenius_schur_indicators(F, [1, 1]), [1, -1])
    F = cat.pointed_cyclic(3, 2).F
    np.testing.assert_allclose(frobenius_schur_indicators(F, [1, 1, 1]), [1, 0, 0])


def test_constant_f_symbols_on_z2_is_coherent():
    F = constant_f_symbols(cat.cyclic_ring(2))
    assert check_pentagon(F).passed
