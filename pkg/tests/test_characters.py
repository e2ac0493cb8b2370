import itertools

import pytest

from semiinf import oracles
from semiinf.characters import (
    Character,
    decomposition_character,
    dual_character,
    irr_character,
    minimal_depth,
    stable_tensor_check,
    tensor_decompose,
    weight_multiplicity,
    weyl_dimension,
)
from semiinf.errors import NotDeepEnough, NotDominant
from semiinf.rootdatum import datum_for, dominant_weights_upto

A1, A2 = datum_for("A1"), datum_for("A2")


def test_small_characters():
    assert irr_character(A1, (0,)) == Character({(0,): 1})
    assert irr_character(A1, (2,)) == Character({(2,): 1, (0,): 1, (-2,): 1})
    adj = irr_character(A2, (1, 1))
    assert adj[(0, 0)] == 2
    assert sorted(m for w, m in adj.items() if w != (0, 0)) == [1] * 6


def test_multiplicities():
    assert weight_multiplicity(A1, (2,), (0,)) == 1
    assert weight_multiplicity(A2, (1, 1), (0, 0)) == 2
    assert weight_multiplicity(A1, (2,), (6,)) == 0
    with pytest.raises(NotDominant):
        irr_character(A1, (-1,))


@pytest.mark.parametrize("symbol", ["A1", "A2", "A3", "B2", "C2", "G2", "B3"])
def test_dimension_and_invariance(symbol):
    d = datum_for(symbol)
    for lam in dominant_weights_upto(d, 3 if d.rank <= 2 else 2):
        ch = irr_character(d, lam)
        assert ch.dim == weyl_dimension(d, lam)
        for nu in ch:
            for i in range(d.rank):
                assert ch[d.reflect(i, nu)] == ch[nu]
        assert irr_character(d, dual_character(d, lam)) == ch.negated()


@pytest.mark.parametrize("symbol", ["A2", "B2", "G2"])
def test_freudenthal_against_kostant_formula(symbol):
    d = datum_for(symbol)
    for lam in dominant_weights_upto(d, 2):
        for nu, m in irr_character(d, lam).items():
            if d.is_dominant(nu):
                assert oracles.kostant_multiplicity(d, lam, nu) == m


def test_tensor_examples():
    assert tensor_decompose(A1, (1,), (1,)) == {(2,): 1, (0,): 1}
    assert tensor_decompose(A2, (1, 0), (0, 1)) == {(1, 1): 1, (0, 0): 1}
    assert tensor_decompose(A2, (3, 1), (0, 0)) == {(3, 1): 1}


@pytest.mark.parametrize("symbol", ["A2", "C2", "G2", "A3"])
def test_tensor_roundtrip(symbol):
    d = datum_for(symbol)
    doms = dominant_weights_upto(d, 2 if d.rank <= 2 else 1)
    for a, b in itertools.combinations_with_replacement(doms, 2):
        dec = tensor_decompose(d, a, b)
        assert decomposition_character(d, dec) == irr_character(d, a) * irr_character(d, b)
        assert dec == oracles.tensor_decompose_full(d, a, b)


def test_stable_tensor_examples():
    v = stable_tensor_check(A1, (2,), (2,))
    assert v.passed and v.decomposition == {(4,): 1, (2,): 1, (0,): 1}
    with pytest.raises(NotDeepEnough):
        stable_tensor_check(A1, (0,), (2,))
    assert stable_tensor_check(A2, (1, 1), (1, 0)).passed


def test_minimal_depth_is_sharp():
    for v in dominant_weights_upto(A2, 3):
        base = minimal_depth(A2, v)
        assert stable_tensor_check(A2, base, v).passed
        for i in range(2):
            if base[i]:
                lower = tuple(c - (j == i) for j, c in enumerate(base))
                with pytest.raises(NotDeepEnough):
                    stable_tensor_check(A2, lower, v)


def test_dual_character():
    assert dual_character(A1, (1,)) == (1,)
    assert dual_character(A2, (1, 0)) == (0, 1)
    assert dual_character(datum_for("C2"), (0, 0)) == (0, 0)


def test_character_json_roundtrip():
    ch = irr_character(A2, (2, 1))
    assert Character.from_json(ch.to_json()) == ch
