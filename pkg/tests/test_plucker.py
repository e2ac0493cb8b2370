import pytest

from semiinf import oracles
from semiinf.characters import Character, irr_character
from semiinf.errors import NotDeepEnough
from semiinf.fibers import LambdaChain
from semiinf.plucker import (
    BigradedSummand,
    dual_target,
    gn_bar_summands,
    hecke_structure_check,
    plucker_hom_character,
    verify_as_colim,
)
from semiinf.rootdatum import datum_for, dominant_weights_upto

A1, A2 = datum_for("A1"), datum_for("A2")


def test_summands():
    assert [s.lam for s in gn_bar_summands(A1, 0)] == [(0,)]
    assert [s.lam for s in gn_bar_summands(A1, 2)] == [(0,), (1,), (2,)]
    assert [s.lam for s in gn_bar_summands(A2, 1)] == [(0, 0), (1, 0), (0, 1)]
    assert all(s.t_twist == tuple(-x for x in s.lam) for s in gn_bar_summands(A2, 2))
    with pytest.raises(ValueError):
        BigradedSummand((1,), Character(), (1,))


def test_hom_character_examples():
    assert plucker_hom_character(A2, (0, 0), (3, 1)) == Character({(0, 0): 1})
    assert plucker_hom_character(A1, (1,), (1,)) == Character({(1,): 1, (-1,): 1})
    assert plucker_hom_character(A2, (1, 0), (1, 1)) == irr_character(A2, (0, 1))


def test_hom_character_against_bruteforce():
    for d in (A1, A2, datum_for("C2")):
        for mu in dominant_weights_upto(d, 2):
            for lam in dominant_weights_upto(d, 3):
                assert plucker_hom_character(d, mu, lam) == oracles.hom_character_bruteforce(d, mu, lam)


def test_hom_dimension_bounded_by_dim():
    for mu in dominant_weights_upto(A2, 3):
        full = irr_character(A2, mu).dim
        for k in range(6):
            assert plucker_hom_character(A2, mu, (k, k)).dim <= full


def test_colim_examples():
    rep = verify_as_colim(A1, (1,))
    assert rep.status == "PASS" and rep.report.stable_value == Character({(1,): 1, (-1,): 1})
    assert rep.threshold_ok
    rep = verify_as_colim(A2, (0, 0))
    assert rep.report.threshold_index == 0 and rep.report.stable_value == Character({(0, 0): 1})
    # V^theta (x) V^rho has only 6 summands, so lam = rho is one step short of stable
    assert plucker_hom_character(A2, (1, 1), (1, 1)).dim == 6
    rep = verify_as_colim(A2, (1, 1), LambdaChain((1, 1), 8))
    assert rep.status == "PASS" and rep.report.threshold_index == 2 == rep.a_priori_index
    assert rep.report.stable_value == irr_character(A2, (1, 1))


def test_dual_target():
    assert dual_target(A2, (1, 0)) == irr_character(A2, (1, 0)).negated()


def test_hecke_examples():
    assert hecke_structure_check(A1, (2,), (2,)).passed
    with pytest.raises(NotDeepEnough):
        hecke_structure_check(A1, (2,), (0,))
    v = hecke_structure_check(A2, (1, 0), (1, 1))
    assert v.passed
    assert all(shift == A2.pairing_2rho(mu) for mu, shift in v.shifts.items())
