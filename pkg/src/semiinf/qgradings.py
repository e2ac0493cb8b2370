"""Graded dimensions: q-Kostant partition function, Lusztig q-analogs, and the closed forms
for Sym(n^-[-2]), Sym(g/b^-[-2]), the Chevalley complex C(n) and O(N).

Every graded quantity is a :class:`QPolynomial` with q^k in cohomological degree 2k
(exterior degree k for the Chevalley complex), measured from the normalisation in which
the mu = 0 fiber is ``1``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Sequence

from .errors import InternalInconsistency, NotInNegCone
from .qpoly import ONE, ZERO, QPolynomial
from .rootdatum import RootDatum, RootVector, Weight


def _recursion_roots(datum: RootDatum) -> tuple[RootVector, ...]:
    # simple roots last so that every residual in Q+ can be completed
    return tuple(sorted(datum.positive_roots, key=lambda r: (-sum(r), r)))


def q_kostant(datum: RootDatum, beta: Sequence[int]) -> QPolynomial:
    """Sum over multisets of positive roots adding up to beta of q^(number of parts)."""
    beta = tuple(beta)
    if any(x < 0 for x in beta):
        return ZERO
    memo = datum.cache.setdefault("q_kostant", {})
    roots = _recursion_roots(datum)
    n_roots = len(roots)

    def rec(i: int, gamma: RootVector) -> QPolynomial:
        if not any(gamma):
            return ONE
        if i == n_roots:
            return ZERO
        key = (i, gamma)
        got = memo.get(key)
        if got is not None:
            return got
        root = roots[i]
        total = ZERO
        j = 0
        g = gamma
        while all(x >= 0 for x in g):
            total = total + rec(i + 1, g).shift(j)
            g = tuple(a - b for a, b in zip(g, root))
            j += 1
        memo[key] = total
        return total

    return rec(0, beta)


def kostant_count(datum: RootDatum, beta: Sequence[int]) -> int:
    """Ungraded Kostant partition function, by its own bottom-up table."""
    beta = tuple(beta)
    if any(x < 0 for x in beta):
        return 0
    table = _box_series(datum, beta, datum.positive_roots, graded=False, exterior=False)
    return table.get(beta, 0)


def _box(beta: RootVector) -> list[RootVector]:
    return list(itertools.product(*(range(b + 1) for b in beta)))


def _box_series(datum: RootDatum, beta: RootVector, weights: Iterable[RootVector], *,
                graded: bool, exterior: bool) -> dict:
    """Coefficients of prod over weights of 1/(1 - q x^w) (or prod (1 + q x^w) if exterior),
    truncated to the box [0, beta]. Values are QPolynomials if graded, ints otherwise."""
    one = ONE if graded else 1
    table: dict = {tuple(0 for _ in beta): one}
    cells = _box(beta)
    for w in weights:
        if any(x < 0 for x in w):
            raise ValueError(f"box series needs weights in Q+, got {w}")
        order = reversed(cells) if exterior else cells
        for v in order:
            src = tuple(a - b for a, b in zip(v, w))
            if any(x < 0 for x in src):
                continue
            prev = table.get(src)
            if not prev:
                continue
            add = prev.shift(1) if graded else prev
            table[v] = table.get(v, 0 if not graded else ZERO) + add
    return table


def neg_cone_root(datum: RootDatum, mu: Sequence[int]) -> RootVector:
    """-mu in simple-root coordinates; raises NotInNegCone unless mu lies in -Lambda^pos."""
    r = datum.to_root_int(tuple(-x for x in mu))
    if r is None or any(x < 0 for x in r):
        raise NotInNegCone(f"weight {tuple(mu)} is not in the negative cone -Lambda^pos")
    return r


def lusztig_q_analog(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> QPolynomial:
    """m^lam_nu(q) = sum over w of sign(w) P_q(w(lam + rho) - (nu + rho)).

    Coefficients are nonnegative for dominant ``nu``; a negative coefficient there raises
    InternalInconsistency. For non-dominant ``nu`` the alternating sum may be signed, and
    only its value at q = 1 (the weight multiplicity) is meaningful.
    """
    lam, nu = tuple(lam), tuple(nu)
    datum.require_dominant(lam)
    if datum.to_root_int(tuple(a - b for a, b in zip(lam, nu))) is None:
        return ZERO
    cache = datum.cache.setdefault("lusztig", {})
    got = cache.get((lam, nu))
    if got is not None:
        return got
    top = tuple(x + 1 for x in lam)
    base = tuple(x + 1 for x in nu)
    total = ZERO
    for w in datum.weyl_group():
        diff = datum.to_root_int(tuple(a - b for a, b in zip(w(top), base)))
        if any(x < 0 for x in diff):
            continue
        term = q_kostant(datum, diff)
        total = total + term if w.sign > 0 else total - term
    if datum.is_dominant(nu) and not total.is_nonnegative():
        raise InternalInconsistency(f"m^{lam}_{nu}(q) = {total} has a negative coefficient")
    return cache.setdefault((lam, nu), total)


def sym_nminus_graded(datum: RootDatum, mu: Sequence[int]) -> QPolynomial:
    """Graded dimension of Sym(n^-[-2]) at weight mu (n^- carries the negative roots)."""
    return q_kostant(datum, neg_cone_root(datum, mu))


def gmodb_weights(datum: RootDatum) -> list[RootVector]:
    """T-weights of g/b^- as a multiset difference weights(g) - weights(b^-)."""
    zero = (0,) * datum.rank
    negatives = [tuple(-x for x in r) for r in datum.positive_roots]
    g = Counter(list(datum.positive_roots) + negatives + [zero] * datum.rank)
    b_minus = Counter(negatives + [zero] * datum.rank)
    quotient = g - b_minus
    return sorted(quotient.elements())


def sym_gmodb_graded(datum: RootDatum, mu: Sequence[int]) -> QPolynomial:
    """Graded dimension of Sym(g/b^-[-2]) at weight -mu, by truncated generating series."""
    beta = neg_cone_root(datum, mu)
    table = _box_series(datum, beta, gmodb_weights(datum), graded=True, exterior=False)
    return table.get(beta, ZERO)


def chevalley_graded(datum: RootDatum, mu: Sequence[int]) -> QPolynomial:
    """C(n)(mu): q^k counts k-element sets of distinct positive roots summing to -mu."""
    beta = neg_cone_root(datum, mu)
    table = _box_series(datum, beta, datum.positive_roots, graded=True, exterior=True)
    return table.get(beta, ZERO)


def oN_weight_dim(datum: RootDatum, mu: Sequence[int]) -> int:
    """dim O(N)(mu) = number of Kostant partitions of -mu."""
    return kostant_count(datum, neg_cone_root(datum, mu))


def delta0_shriek_fiber(datum: RootDatum, mu: Sequence[int]) -> QPolynomial:
    """Associated graded of the filtration: sum over mu1 + mu2 = mu of Sym(mu1) C(n)(mu2)."""
    beta = neg_cone_root(datum, mu)
    sym = _box_series(datum, beta, datum.positive_roots, graded=True, exterior=False)
    chev = _box_series(datum, beta, datum.positive_roots, graded=True, exterior=True)
    total = ZERO
    for b1 in _box(beta):
        b2 = tuple(a - b for a, b in zip(beta, b1))
        s, c = sym.get(b1), chev.get(b2)
        if s and c:
            total = total + s * c
    return total


def neg_cone_points(datum: RootDatum, height_bound: int) -> list[RootVector]:
    """All beta in Q+ of height <= bound (so mu = -beta), by height then lexicographically."""
    out = [b for b in itertools.product(range(height_bound + 1), repeat=datum.rank) if sum(b) <= height_bound]
    return sorted(out, key=lambda b: (sum(b), tuple(-x for x in b)))


def neg_weight(datum: RootDatum, beta: Sequence[int]) -> Weight:
    """The weight -beta in fundamental coordinates."""
    return tuple(-x for x in datum.from_root(beta))
