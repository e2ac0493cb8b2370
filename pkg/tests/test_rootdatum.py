import pytest

from semiinf.errors import MalformedCartan, NotDominant, NotFiniteType
from semiinf.rootdatum import (
    CartanMatrix,
    build_root_datum,
    cartan_from_type,
    datum_for,
    dominant_weights_upto,
    dot_action,
    in_pos_cone,
    leq_nonstandard,
    load_cartan,
    pairing_2rho,
)

TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2", "D4"]
POS_ROOT_COUNT = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C2": 4, "C3": 9, "G2": 6, "D4": 12, "F4": 24}


@pytest.mark.parametrize("symbol", sorted(POS_ROOT_COUNT))
def test_positive_root_counts(symbol):
    assert len(datum_for(symbol).positive_roots) == POS_ROOT_COUNT[symbol]


def test_literal_matrices():
    assert datum_for("A1").positive_roots == ((1,),)
    a2 = build_root_datum(CartanMatrix.from_rows([[2, -1], [-1, 2]]))
    assert set(a2.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert len(build_root_datum(CartanMatrix.from_rows([[2, -1], [-2, 2]])).positive_roots) == 4


def test_malformed_and_infinite():
    with pytest.raises(MalformedCartan):
        CartanMatrix.from_rows([[2, 1], [-1, 2]])
    with pytest.raises(MalformedCartan):
        CartanMatrix.from_rows([[2, -1], [0, 2]])
    with pytest.raises(MalformedCartan):
        cartan_from_type("Z9")
    with pytest.raises(NotFiniteType):
        build_root_datum(CartanMatrix.from_rows([[2, -2], [-2, 2]]))


def test_load_cartan_json(tmp_path):
    p = tmp_path / "m.json"
    p.write_text('{"cartan": [[2, -1], [-1, 2]]}')
    cartan, _ = load_cartan(str(p))
    assert cartan.entries == ((2, -1), (-1, 2))


def test_pairing():
    a1, a2 = datum_for("A1"), datum_for("A2")
    assert pairing_2rho(a1, a1.from_root((1,))) == 2
    assert pairing_2rho(a2, (0, 0)) == 0
    assert pairing_2rho(a2, a2.from_root((1, 1))) == 4


@pytest.mark.parametrize("symbol", TYPES)
def test_root_heights_and_longest_element(symbol):
    d = datum_for(symbol)
    for b in d.positive_roots:
        assert d.pairing_2rho(d.from_root(b)) == 2 * sum(b)
    assert d.longest_element.length == len(d.positive_roots)
    for lam in dominant_weights_upto(d, 2):
        assert d.is_dominant(tuple(-x for x in d.longest_element(lam)))


def test_pos_cone():
    a1, a2 = datum_for("A1"), datum_for("A2")
    assert in_pos_cone(a1, (2,))
    assert not in_pos_cone(a1, (1,))
    assert not in_pos_cone(a2, a2.from_root((1, -1)))


def test_nonstandard_order():
    a1, a2 = datum_for("A1"), datum_for("A2")
    assert leq_nonstandard(a2, (0, 0), (1, 1))
    assert not leq_nonstandard(a1, (2,), (1,))
    assert not leq_nonstandard(a2, (1, 0), (0, 1))
    with pytest.raises(NotDominant):
        leq_nonstandard(a1, (-1,), (1,))
    doms = dominant_weights_upto(a2, 3)
    for x in doms:
        for y in doms:
            top = tuple(a + b for a, b in zip(x, y))
            assert leq_nonstandard(a2, x, top) and leq_nonstandard(a2, y, top)


def test_weyl_groups():
    a1, a2 = datum_for("A1"), datum_for("A2")
    assert [w.length for w in a1.weyl_group()] == [0, 1]
    assert sorted(w.length for w in a2.weyl_group()) == [0, 1, 1, 2, 2, 3]
    s = a1.weyl_group()[1]
    assert dot_action(a1, s, (0,)) == (-2,)
    assert len(datum_for("B3").weyl_group()) == 48
    assert len(datum_for("G2").weyl_group()) == 12


def test_dot_action_is_action():
    d = datum_for("A2")
    W = d.weyl_group()
    lam = (2, -1)
    by_action = {w.action: w for w in W}
    for u in W:
        for v in W:
            uv = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in zip(*v.action)) for row in u.action)
            w = by_action[uv]
            assert d.dot_action(w, lam) == d.dot_action(u, d.dot_action(v, lam))


def test_root_lattice_option():
    d = datum_for("A2", lattice="root")
    assert d.in_lattice((1, 1)) and not d.in_lattice((1, 0))
    assert dominant_weights_upto(d, 3) == [(0, 0), (1, 1), (3, 0), (0, 3)]
