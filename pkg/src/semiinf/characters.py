"""Exact character arithmetic: Freudenthal multiplicities, tensor products, duals."""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
import itertools
from math import lcm
from typing import Iterable, Iterator, Sequence

from .errors import InternalInconsistency, NotDeepEnough, NotDominant
from .rootdatum import RootDatum, Weight


class Character(Mapping):
    """Finite map weight -> positive multiplicity (zero entries are dropped)."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Sequence[int], int] | Iterable | None = None):
        items = entries.items() if isinstance(entries, Mapping) else (entries or ())
        acc: dict[Weight, int] = {}
        for w, m in items:
            w = tuple(w)
            acc[w] = acc.get(w, 0) + int(m)
        self._entries = {w: m for w, m in acc.items() if m}

    def __getitem__(self, w):
        return self._entries.get(tuple(w), 0)

    def __contains__(self, w) -> bool:
        return tuple(w) in self._entries

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self._entries))

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, Character):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == Character(other)._entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {m}" for w, m in self.items())
        return f"Character({{{body}}})"

    @property
    def dim(self) -> int:
        return sum(self._entries.values())

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self._entries.values())

    def __add__(self, other: "Character") -> "Character":
        acc = dict(self._entries)
        for w, m in other._entries.items():
            acc[w] = acc.get(w, 0) + m
        return Character(acc)

    def __sub__(self, other: "Character") -> "Character":
        return self + other.scaled(-1)

    def scaled(self, c: int) -> "Character":
        return Character({w: c * m for w, m in self._entries.items()})

    def __mul__(self, other: "Character") -> "Character":
        acc: dict[Weight, int] = {}
        for w1, m1 in self._entries.items():
            for w2, m2 in other._entries.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                acc[w] = acc.get(w, 0) + m1 * m2
        return Character(acc)

    def negated(self) -> "Character":
        return Character({tuple(-x for x in w): m for w, m in self._entries.items()})

    def shifted(self, by: Sequence[int]) -> "Character":
        return Character({tuple(a + b for a, b in zip(w, by)): m for w, m in self._entries.items()})

    def to_json(self) -> list:
        return [[list(w), m] for w, m in self.items()]

    @classmethod
    def from_json(cls, data: list) -> "Character":
        return cls((tuple(w), m) for w, m in data)


IrrDecomposition = dict  # dominant highest weight -> multiplicity


# ---------------------------------------------------------------- Freudenthal
def _form_data(datum: RootDatum):
    """Integer Gram matrix G and scale L with (x, y) = x^T G y / L; cached per datum."""
    data = datum.cache.get("form")
    if data is None:
        n = datum.rank
        rows = [[datum.form(tuple(int(i == k) for k in range(n)), tuple(int(j == k) for k in range(n)))
                 for j in range(n)] for i in range(n)]
        scale = lcm(*(x.denominator for row in rows for x in row))
        gram = tuple(tuple(int(x * scale) for x in row) for row in rows)
        roots = tuple(datum.from_root(b) for b in datum.positive_roots)
        data = datum.cache.setdefault("form", (gram, scale, roots))
    return data


def _ip(gram, x, y) -> int:
    return sum(x[i] * sum(g * yy for g, yy in zip(gram[i], y)) for i in range(len(x)) if x[i])


@dataclass
class _Freudenthal:
    datum: RootDatum
    lam: Weight
    memo: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.gram, _, self.roots = _form_data(self.datum)
        top = tuple(x + 1 for x in self.lam)
        self.norm_top = _ip(self.gram, top, top)
        self.root_data = []
        for beta in self.roots:
            g_beta = tuple(sum(g * b for g, b in zip(row, beta)) for row in self.gram)
            self.root_data.append((beta, g_beta, sum(x * y for x, y in zip(beta, g_beta))))
        self.memo[self.lam] = 1
        self._below: dict[Weight, bool] = {}

    def below(self, nu: Weight) -> bool:
        got = self._below.get(nu)
        if got is None:
            r = self.datum.to_root_int(tuple(a - b for a, b in zip(self.lam, nu)))
            got = self._below[nu] = r is not None and all(x >= 0 for x in r)
        return got

    def dominant_mult(self, nu: Weight) -> int:
        """Multiplicity of a dominant weight nu."""
        got = self.memo.get(nu)
        if got is not None:
            return got
        if not self.below(nu):
            self.memo[nu] = 0
            return 0
        total = 0
        for beta, g_beta, bb in self.root_data:
            ip = sum(x * y for x, y in zip(nu, g_beta))
            w = nu
            while True:
                w = tuple(a + b for a, b in zip(w, beta))
                ip += bb
                dom = self.datum.dominant_of(w)
                if not self.below(dom):
                    break
                total += ip * self.dominant_mult(dom)
        shifted = tuple(x + 1 for x in nu)
        den = self.norm_top - _ip(self.gram, shifted, shifted)
        num = 2 * total
        if den <= 0 or num % den:
            raise InternalInconsistency(f"Freudenthal recursion not integral at {nu} for {self.lam}")
        m = num // den
        self.memo[nu] = m
        return m

    def mult(self, nu: Sequence[int]) -> int:
        dom, _ = self.datum.dominant_rep(nu)
        return self.dominant_mult(dom)

    def dominant_weights(self) -> list[Weight]:
        seen = {self.lam}
        todo = [self.lam]
        while todo:
            x = todo.pop()
            for beta in self.roots:
                y = tuple(a - b for a, b in zip(x, beta))
                if y not in seen and all(c >= 0 for c in y):
                    seen.add(y)
                    todo.append(y)
        return sorted(seen, key=lambda nu: self.datum.height(self.datum.to_root_int(
            tuple(a - b for a, b in zip(self.lam, nu)))))


def _engine(datum: RootDatum, lam: Weight) -> _Freudenthal:
    table = datum.cache.setdefault("freudenthal", {})
    eng = table.get(lam)
    if eng is None:
        eng = table.setdefault(lam, _Freudenthal(datum, lam))
    return eng


def weight_multiplicity(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    lam, nu = tuple(lam), tuple(nu)
    datum.require_dominant(lam)
    return _engine(datum, lam).mult(nu)


def irr_character(datum: RootDatum, lam: Sequence[int]) -> Character:
    lam = tuple(lam)
    datum.require_dominant(lam)
    cache = datum.cache.setdefault("irr", {})
    got = cache.get(lam)
    if got is not None:
        return got
    eng = _engine(datum, lam)
    entries: dict[Weight, int] = {}
    for nu in eng.dominant_weights():
        m = eng.dominant_mult(nu)
        if m <= 0:
            raise InternalInconsistency(f"dominant weight {nu} of V^{lam} has multiplicity {m}")
        for w in datum.orbit(nu):
            entries[w] = m
    char = Character(entries)
    dim = weyl_dimension(datum, lam)
    if char.dim != dim:
        raise InternalInconsistency(f"dim V^{lam}: character gives {char.dim}, Weyl formula {dim}")
    return cache.setdefault(lam, char)


def weyl_dimension(datum: RootDatum, lam: Sequence[int]) -> int:
    gram, _, roots = _form_data(datum)
    top = tuple(x + 1 for x in lam)
    value = Fraction(1)
    for beta in roots:
        value *= Fraction(_ip(gram, top, beta), _ip(gram, datum.rho, beta))
    assert value.denominator == 1
    return int(value)


# ---------------------------------------------------------------- tensor products
def _highest(datum: RootDatum, char: Mapping) -> Weight:
    return max(char, key=lambda w: (datum.pairing_2rho(w), w))


def decompose_character(datum: RootDatum, char: Character) -> IrrDecomposition:
    """Peel off irreducibles by repeatedly subtracting the character of the top weight."""
    rest = dict(char.items())
    out: IrrDecomposition = {}
    while rest:
        top = _highest(datum, rest)
        m = rest[top]
        if m < 0 or not datum.is_dominant(top):
            raise InternalInconsistency(f"leading term {top} (mult {m}) is not a dominant positive term")
        out[top] = m
        for w, k in irr_character(datum, top).items():
            left = rest.get(w, 0) - m * k
            if left:
                rest[w] = left
            else:
                rest.pop(w, None)
    return dict(sorted(out.items(), key=lambda kv: (-datum.pairing_2rho(kv[0]), kv[0])))


def _spread(datum: RootDatum, lam: Weight) -> int:
    """Height of lam - w0(lam): every weight of V^lam lies within this height of lam."""
    w0 = datum.longest_element
    return sum(datum.to_root_int(tuple(a - b for a, b in zip(lam, w0(lam)))))


def tensor_decompose(datum: RootDatum, lam1: Sequence[int], lam2: Sequence[int]) -> IrrDecomposition:
    """Multiplicities of V^nu in V^lam1 (x) V^lam2 by leading-term subtraction.

    Every constituent has highest weight lam1 + lam2 - beta with height(beta) bounded by the
    spread of the smaller factor, so the product character is only formed on the dominant
    weights of that window.
    """
    lam1, lam2 = tuple(lam1), tuple(lam2)
    datum.require_dominant(lam1, lam2)
    key = (lam1, lam2) if lam1 <= lam2 else (lam2, lam1)
    cache = datum.cache.setdefault("tensor", {})
    got = cache.get(key)
    if got is not None:
        return dict(got)
    small, big = sorted(key, key=lambda w: (_spread(datum, w), w))
    bound = _spread(datum, small)
    top = tuple(a + b for a, b in zip(lam1, lam2))
    window: list[Weight] = []
    for beta in itertools.product(range(bound + 1), repeat=datum.rank):
        if sum(beta) <= bound:
            nu = tuple(a - b for a, b in zip(top, datum.from_root(beta)))
            if datum.is_dominant(nu):
                window.append(nu)
    small_char = irr_character(datum, small)
    big_eng = _engine(datum, big)
    rest: dict[Weight, int] = {}
    for nu in window:
        m = sum(k * big_eng.mult(tuple(a - b for a, b in zip(nu, kappa))) for kappa, k in small_char.items())
        if m:
            rest[nu] = m
    out: IrrDecomposition = {}
    while rest:
        head = _highest(datum, rest)
        m = rest.pop(head)
        if m < 0:
            raise InternalInconsistency(f"negative leading multiplicity {m} at {head}")
        out[head] = m
        eng = _engine(datum, head)
        for nu in list(rest):
            k = eng.dominant_mult(nu)
            if k:
                left = rest[nu] - m * k
                if left:
                    rest[nu] = left
                else:
                    del rest[nu]
    result = dict(sorted(out.items(), key=lambda kv: (-datum.pairing_2rho(kv[0]), kv[0])))
    cache.setdefault(key, result)
    return dict(result)


def decomposition_character(datum: RootDatum, decomposition: Mapping) -> Character:
    total = Character()
    for nu, m in decomposition.items():
        total = total + irr_character(datum, nu).scaled(m)
    return total


@dataclass
class TensorVerdict:
    passed: bool
    lam: Weight
    v_highest: Weight
    decomposition: IrrDecomposition
    expected: IrrDecomposition
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "lam": list(self.lam),
            "v": list(self.v_highest),
            "status": "PASS" if self.passed else "FAIL",
            "decomposition": [[list(k), v] for k, v in sorted(self.decomposition.items())],
            "witness": self.witness,
        }


def deep_enough(datum: RootDatum, lam: Sequence[int], v_highest: Sequence[int]) -> bool:
    """lam + mu dominant for every weight mu of V^{v_highest}."""
    return all(all(a + b >= 0 for a, b in zip(lam, mu)) for mu in irr_character(datum, v_highest))


def minimal_depth(datum: RootDatum, v_highest: Sequence[int]) -> Weight:
    """Coordinatewise least lam with lam + mu dominant for every weight mu of V^{v_highest}."""
    char = irr_character(datum, v_highest)
    return tuple(max(0, -min(mu[i] for mu in char)) for i in range(datum.rank))


def stable_tensor_check(datum: RootDatum, lam: Sequence[int], v_highest: Sequence[int]) -> TensorVerdict:
    """Compare V^lam (x) V against the sum of V^{lam+mu} (x) V(mu) for lam deep in the cone."""
    lam, v_highest = tuple(lam), tuple(v_highest)
    datum.require_dominant(lam, v_highest)
    weights = irr_character(datum, v_highest)
    bad = [mu for mu in weights if any(a + b < 0 for a, b in zip(lam, mu))]
    if bad:
        raise NotDeepEnough(f"lam={lam} + mu={bad[0]} is not dominant for V^{v_highest}")
    expected = {tuple(a + b for a, b in zip(lam, mu)): m for mu, m in weights.items()}
    got = tensor_decompose(datum, lam, v_highest)
    passed = got == expected
    witness = None
    if not passed:
        diff = sorted(set(got) | set(expected))
        witness = {str(list(nu)): [got.get(nu, 0), expected.get(nu, 0)] for nu in diff
                   if got.get(nu, 0) != expected.get(nu, 0)}
    return TensorVerdict(passed, lam, v_highest, got, expected, witness)


def dual_character(datum: RootDatum, lam: Sequence[int]) -> Weight:
    """Highest weight of the dual: -w0(lam)."""
    lam = tuple(lam)
    datum.require_dominant(lam)
    w0 = datum.longest_element
    return tuple(-x for x in w0(lam))


__all__ = [
    "Character", "IrrDecomposition", "TensorVerdict", "NotDominant",
    "irr_character", "weight_multiplicity", "weyl_dimension", "tensor_decompose",
    "decompose_character", "decomposition_character", "stable_tensor_check",
    "deep_enough", "minimal_depth", "dual_character",
]
