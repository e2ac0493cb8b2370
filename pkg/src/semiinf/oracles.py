"""Brute-force cross-checks, deliberately sharing no code path with the main routines."""
from __future__ import annotations

import itertools
from typing import Sequence

from .characters import Character, decompose_character, irr_character
from .qpoly import QPolynomial
from .rootdatum import RootDatum, Weight


def _sum(vectors, rank: int) -> tuple[int, ...]:
    out = [0] * rank
    for v in vectors:
        for i, x in enumerate(v):
            out[i] += x
    return tuple(out)


def q_kostant_multisets(datum: RootDatum, beta: Sequence[int]) -> QPolynomial:
    """Enumerate every multiset of positive roots of each size up to height(beta)."""
    beta = tuple(beta)
    if any(x < 0 for x in beta):
        return QPolynomial()
    coeffs = [0] * (sum(beta) + 1)
    for k in range(sum(beta) + 1):
        for combo in itertools.combinations_with_replacement(datum.positive_roots, k):
            if _sum(combo, datum.rank) == beta:
                coeffs[k] += 1
    return QPolynomial(tuple(coeffs))


def chevalley_subsets(datum: RootDatum, beta: Sequence[int]) -> QPolynomial:
    beta = tuple(beta)
    coeffs = [0] * (len(datum.positive_roots) + 1)
    for k in range(len(datum.positive_roots) + 1):
        for combo in itertools.combinations(datum.positive_roots, k):
            if _sum(combo, datum.rank) == beta:
                coeffs[k] += 1
    return QPolynomial(tuple(coeffs))


def delta0_euler_bruteforce(datum: RootDatum, beta: Sequence[int]) -> int:
    """Sum over (multiset, set) pairs of positive roots with total beta of (-1)^(sizes)."""
    beta = tuple(beta)
    total = 0
    h = sum(beta)
    for k in range(h + 1):
        for ms in itertools.combinations_with_replacement(datum.positive_roots, k):
            s1 = _sum(ms, datum.rank)
            if any(a > b for a, b in zip(s1, beta)):
                continue
            rest = tuple(b - a for a, b in zip(s1, beta))
            for j in range(len(datum.positive_roots) + 1):
                for sub in itertools.combinations(datum.positive_roots, j):
                    if _sum(sub, datum.rank) == rest:
                        total += (-1) ** (k + j)
    return total


def kostant_multiplicity(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    """Kostant's alternating multiplicity formula with multiset counts."""
    top = tuple(x + 1 for x in lam)
    base = tuple(x + 1 for x in nu)
    if datum.to_root_int(tuple(a - b for a, b in zip(lam, nu))) is None:
        return 0
    total = 0
    for w in datum.weyl_group():
        diff = datum.to_root_int(tuple(a - b for a, b in zip(w(top), base)))
        if all(x >= 0 for x in diff):
            total += w.sign * q_kostant_multisets(datum, diff)(1)
    return total


def tensor_decompose_full(datum: RootDatum, lam1: Sequence[int], lam2: Sequence[int]) -> dict:
    """Leading-term subtraction on the full product character."""
    return decompose_character(datum, irr_character(datum, lam1) * irr_character(datum, lam2))


def stable_side_character(datum: RootDatum, lam: Sequence[int], v_highest: Sequence[int]) -> Character:
    """Character of the sum over mu of V^{lam+mu} (x) V(mu)."""
    total = Character()
    for mu, m in irr_character(datum, v_highest).items():
        total = total + irr_character(datum, tuple(a + b for a, b in zip(lam, mu))).scaled(m)
    return total


def product_character(datum: RootDatum, lam: Sequence[int], v_highest: Sequence[int]) -> Character:
    return irr_character(datum, lam) * irr_character(datum, v_highest)


def hom_character_bruteforce(datum: RootDatum, mu: Sequence[int], lam: Sequence[int]) -> Character:
    """Sum over nu of [V^nu (x) (V^lam)^* : V^mu] e^{lam - nu}, via full character products."""
    mu, lam = tuple(mu), tuple(lam)
    lam_dual_char = irr_character(datum, lam).negated()
    out: dict[Weight, int] = {}
    for kappa in irr_character(datum, mu):
        nu = tuple(a + b for a, b in zip(lam, kappa))
        if any(c < 0 for c in nu):
            continue
        dec = decompose_character(datum, irr_character(datum, nu) * lam_dual_char)
        m = dec.get(mu, 0)
        if m:
            out[tuple(a - b for a, b in zip(lam, nu))] = m
    return Character(out)
