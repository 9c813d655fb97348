import pytest

from umtc import catalog as cat
from umtc.bundle import CategoryBundle
from umtc.errors import MissingDataError, OrderingError, UnsupportedError
from umtc.points import (AbstractPointCandidate, Mode, Outcome, comparability_resolve, holomorphic_obstruction,
                         intersection_category, modular_spectrum_check, mutual_centralizer_pairs, trivial_pairing)
from umtc.subcategories import closure, deligne_product, enumerate_subcategories, prime_factorize


@pytest.fixture(scope="module")
def semion_pair():
    P = deligne_product(cat.semion(), cat.antisemion())
    left = closure(P, ["s.1"])
    right = closure(P, ["1.s"])
    return P, left, right


def test_unit_pairs_trivially(shipped):
    for b in shipped.values():
        unit = closure(b)
        for D in enumerate_subcategories(b):
            for mode in Mode:
                assert trivial_pairing(b, unit, D, mode).passed


def test_strict_mode_carries_caveat(ising):
    psi = closure(ising, ["psi"])
    rep = trivial_pairing(ising, psi, psi, "braiding-strict")
    assert not rep.passed and rep.caveat
    assert rep.failures == ((2, 2, 0),)


def test_product_factors_pair_trivially(semion_pair):
    P, left, right = semion_pair
    assert trivial_pairing(P, left, right).passed
    assert intersection_category(P, left, right).is_trivial


def test_ising_psi_pairs_with_itself(ising):
    psi = closure(ising, ["psi"])
    assert trivial_pairing(ising, psi, psi).passed
    sigma = closure(ising, ["sigma"])
    rep = trivial_pairing(ising, sigma, psi)
    assert not rep.passed and (1, 2) in rep.failures


def test_strict_mode_needs_braiding():
    b = cat.ising(1)
    bare = CategoryBundle("bare", b.ring, b.F)
    with pytest.raises(MissingDataError):
        AbstractPointCandidate(closure(bare), closure(bare), "braiding-strict")


def test_intersections(ising):
    psi, full = closure(ising, ["psi"]), closure(ising, ["sigma"])
    assert intersection_category(ising, psi, full) == psi
    for D in enumerate_subcategories(ising):
        assert intersection_category(ising, D, D) == D


def test_modular_spectrum(fib):
    assert modular_spectrum_check(fib, closure(fib)).passed
    assert modular_spectrum_check(fib, closure(fib, ["tau"])).passed
    b = cat.rep_z2()
    v = modular_spectrum_check(b, closure(b, ["g"]))
    assert not v.passed and v.witness == 1


def test_comparability_fibonacci(fib):
    tau, unit = closure(fib, ["tau"]), closure(fib)
    assert comparability_resolve(fib, tau, unit).outcome is Outcome.RIGHT_COLLAPSES
    assert comparability_resolve(fib, unit, tau).outcome is Outcome.LEFT_COLLAPSES
    v = comparability_resolve(fib, unit, unit)
    assert v.outcome is Outcome.BOTH_TRIVIAL and v.witness is None
    v = comparability_resolve(fib, tau, tau)
    assert v.obstruction and v.witness["kind"] == "monodromy"


def test_comparability_non_prime(semion_pair):
    P, left, right = semion_pair
    v = comparability_resolve(P, left, right)
    assert v.obstruction
    assert v.witness["kind"] == "non-prime"
    assert v.certificates["left_in_Z_right"] and v.certificates["right_in_Z_left"]


def test_comparability_degenerate_closure(ising):
    psi = closure(ising, ["psi"])
    v = comparability_resolve(ising, psi, psi)
    assert v.obstruction
    assert v.witness == {"kind": "degenerate-spectrum", "side": "left", "subcategory": (0, 2), "sector": 2}


def test_comparability_rejects_degenerate_bundle():
    b = cat.rep_z2()
    with pytest.raises(UnsupportedError):
        comparability_resolve(b, closure(b), closure(b))


def test_holomorphic_obstruction(ising, semion_pair):
    P, left, right = semion_pair
    assert holomorphic_obstruction(P, left, right).passed
    psi = closure(ising, ["psi"])
    v = holomorphic_obstruction(ising, psi, psi)
    assert not v.passed and v.witness == 2
    assert holomorphic_obstruction(ising, closure(ising), closure(ising, ["sigma"])).passed
    with pytest.raises(OrderingError):
        holomorphic_obstruction(ising, closure(ising, ["sigma"]), psi)


def test_mutual_pairs_are_symmetric(modular_shipped):
    for b in modular_shipped.values():
        pairs = {(A.members, B.members) for A, B in mutual_centralizer_pairs(b)}
        assert all((y, x) in pairs for x, y in pairs)


def test_factorization_pairs_all_obstruct():
    for A, B in [(cat.ising(1), cat.fibonacci()), (cat.semion(), cat.semion())]:
        P = deligne_product(A, B)
        pf = prime_factorize(P)
        v = comparability_resolve(P, pf.factors[0], pf.factors[1])
        assert v.witness["kind"] == "non-prime"
