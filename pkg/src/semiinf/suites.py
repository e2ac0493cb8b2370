"""Verification suites run by the command line.

Each suite returns ``{"status": ..., "entries": [...]}`` where every entry is JSON-native and
carries its own PASS / FAIL / SKIP / REPORT status. Iteration orders are fixed, so a given
configuration always produces the same document.
"""
from __future__ import annotations

import itertools
from typing import Callable

from . import oracles
from .characters import (
    dual_character,
    irr_character,
    minimal_depth,
    stable_tensor_check,
    tensor_decompose,
    weight_multiplicity,
    weyl_dimension,
)
from .errors import SemiInfError
from .fibers import LambdaChain, fiber_table, heart_character_check, shriek_fiber_approximant, star_fiber_approximant
from .plucker import hecke_structure_check, verify_as_colim
from .qgradings import (
    chevalley_graded,
    delta0_shriek_fiber,
    lusztig_q_analog,
    neg_cone_points,
    neg_weight,
    q_kostant,
    sym_gmodb_graded,
    sym_nminus_graded,
)
from .rootdatum import RootDatum, dominant_weights_upto, leq_nonstandard

MAX_TENSOR_DIM = 27


def aggregate(entries: list[dict]) -> str:
    statuses = {e["status"] for e in entries}
    for s in ("FAIL", "REPORT", "PASS"):
        if s in statuses:
            return s
    return "SKIP"


def _suite(entries: list[dict], **extra) -> dict:
    return {"status": aggregate(entries), "entries": entries, **extra}


# ------------------------------------------------------------------ fibers
def fibers_suite(datum: RootDatum, mu_height: int, chain: LambdaChain) -> dict:
    table = fiber_table(datum, mu_height, chain)
    entries = [e.to_json() for e in table.entries.values()]
    heart = heart_character_check(datum, mu_height, chain)
    heart_json = {
        "status": "PASS" if heart.passed else ("REPORT" if heart.unstable and not heart.mismatches else "FAIL"),
        "dims": [[[-x for x in b], d] for b, d in heart.dims.items()],
    }
    return _suite(entries, chain={"generator": list(chain.generator), "k_max": chain.k_max},
                  heart_check=heart_json, table_valid=table.validate())


# ------------------------------------------------------------------ delta0
def delta0_suite(datum: RootDatum, mu_height: int) -> dict:
    entries = []
    for beta in neg_cone_points(datum, mu_height):
        poly = delta0_shriek_fiber(datum, neg_weight(datum, beta))
        if any(beta):
            ok = poly.min_degree is not None and poly.min_degree >= 1
        else:
            ok = poly == 1
        entries.append({
            "mu": [-x for x in beta],
            "delta0": poly.to_json(),
            "min_degree": poly.min_degree,
            "status": "PASS" if ok else "FAIL",
        })
    return _suite(entries)


# ------------------------------------------------------------------ tensor
def tensor_grid(datum: RootDatum, max_dim: int = MAX_TENSOR_DIM, v_bound: int | None = None):
    """Deterministic (lam, v) pairs: every dominant v with dim V^v <= max_dim, each paired with
    its minimal deep lam, that lam plus rho, and that lam plus each fundamental weight."""
    bound = v_bound if v_bound is not None else max_dim - 1
    pairs = []
    for v in dominant_weights_upto(datum, bound):
        if weyl_dimension(datum, v) > max_dim:
            continue
        base = minimal_depth(datum, v)
        shifts = [datum.zero, datum.rho] + [tuple(int(i == j) for j in range(datum.rank)) for i in range(datum.rank)]
        seen = set()
        for s in shifts:
            lam = tuple(a + b for a, b in zip(base, s))
            if lam in seen or not datum.in_lattice(lam):
                continue
            seen.add(lam)
            pairs.append((lam, v))
    return pairs


def tensor_entry(datum: RootDatum, lam, v) -> dict:
    verdict = stable_tensor_check(datum, lam, v)
    product = oracles.product_character(datum, lam, v)
    oracle_ok = oracles.stable_side_character(datum, lam, v) == product
    full_ok = oracles.tensor_decompose_full(datum, lam, v) == verdict.decomposition
    hecke = hecke_structure_check(datum, v, lam)
    ok = verdict.passed and oracle_ok and full_ok and hecke.passed
    return {
        "key": {"lam": list(lam), "v": list(v)},
        "stable_check": "PASS" if verdict.passed else "FAIL",
        "oracle_agrees": oracle_ok,
        "full_product_agrees": full_ok,
        "hecke": "PASS" if hecke.passed else "FAIL",
        "dim": product.dim,
        "decomposition": [[list(k), m] for k, m in sorted(verdict.decomposition.items())],
        "summary": f"{len(verdict.decomposition)} summands, dim {product.dim}",
        "status": "PASS" if ok else "FAIL",
        "witness": verdict.witness,
    }


def tensor_suite(datum: RootDatum, v_bound: int, max_dim: int = MAX_TENSOR_DIM) -> dict:
    entries = []
    for lam, v in tensor_grid(datum, max_dim, v_bound):
        try:
            entries.append(tensor_entry(datum, lam, v))
        except SemiInfError as exc:
            entries.append({"key": {"lam": list(lam), "v": list(v)}, "summary": str(exc), "status": "FAIL"})
    return _suite(entries, max_dim=max_dim)


# ------------------------------------------------------------------ plucker
def plucker_suite(datum: RootDatum, mu_height: int, chain: LambdaChain) -> dict:
    entries = []
    for mu in dominant_weights_upto(datum, mu_height):
        rep = verify_as_colim(datum, mu, chain)
        status = rep.status
        if status == "PASS" and not rep.threshold_ok:
            status = "FAIL"
        entry = rep.to_json()
        entry.update({
            "key": list(mu),
            "summary": f"threshold {rep.report.threshold_index} (a-priori {rep.a_priori_index})",
            "status": status,
        })
        entries.append(entry)
    return _suite(entries, chain={"generator": list(chain.generator), "k_max": chain.k_max})


# ------------------------------------------------------------------ selftest
def _check(name: str, fn: Callable[[], bool | str]) -> dict:
    try:
        result = fn()
    except SemiInfError as exc:
        return {"key": name, "summary": f"error: {exc}", "status": "FAIL"}
    if result is True:
        return {"key": name, "summary": "", "status": "PASS"}
    return {"key": name, "summary": str(result), "status": "FAIL"}


def selftest_suite(datum: RootDatum) -> dict:
    small = 2 if datum.rank <= 2 else 1
    height = 4 if datum.rank <= 2 else 2
    doms = dominant_weights_upto(datum, small)
    W = datum.weyl_group()
    sample_w = W[:2000]
    betas = neg_cone_points(datum, height)

    def roots_pairing():
        return all(datum.pairing_2rho(datum.from_root(b)) == 2 * sum(b) for b in datum.positive_roots)

    def w0_length():
        return len(datum.positive_roots) == datum.longest_element.length

    def lengths():
        return all(w.length == datum.inversions(w) for w in sample_w)

    def w0_dominance():
        w0 = datum.longest_element
        return all(datum.is_dominant(tuple(-x for x in w0(lam))) for lam in doms)

    def directed():
        for a, b in itertools.product(doms, repeat=2):
            top = tuple(x + y for x, y in zip(a, b))
            if not (leq_nonstandard(datum, a, top) and leq_nonstandard(datum, b, top)):
                return f"no upper bound for {a}, {b}"
        return True

    def dims():
        return all(irr_character(datum, lam).dim == weyl_dimension(datum, lam) for lam in doms)

    def weyl_invariance():
        for lam in doms:
            ch = irr_character(datum, lam)
            for nu in ch:
                for i in range(datum.rank):
                    if ch[datum.reflect(i, nu)] != ch[nu]:
                        return f"V^{lam} not invariant at {nu}"
        return True

    def duality():
        return all(irr_character(datum, dual_character(datum, lam)) == irr_character(datum, lam).negated()
                   for lam in doms)

    def q_analog_at_one():
        for lam in doms:
            for nu in irr_character(datum, lam):
                if lusztig_q_analog(datum, lam, nu)(1) != weight_multiplicity(datum, lam, nu):
                    return f"m^{lam}_{nu}(1) mismatch"
        return True

    def kostant_bruteforce():
        return all(q_kostant(datum, b) == oracles.q_kostant_multisets(datum, b) for b in betas)

    def two_descriptions():
        return all(sym_nminus_graded(datum, neg_weight(datum, b)) == sym_gmodb_graded(datum, neg_weight(datum, b))
                   for b in betas)

    def chevalley_bruteforce():
        return all(chevalley_graded(datum, neg_weight(datum, b)) == oracles.chevalley_subsets(datum, b)
                   for b in betas)

    def delta0_euler():
        low = [b for b in betas if sum(b) <= 3]
        return all(delta0_shriek_fiber(datum, neg_weight(datum, b))(-1) == oracles.delta0_euler_bruteforce(datum, b)
                   for b in low)

    def tensor_roundtrip():
        for a, b in itertools.combinations_with_replacement(doms, 2):
            if oracles.tensor_decompose_full(datum, a, b) != tensor_decompose(datum, a, b):
                return f"V^{a} x V^{b} disagrees"
        return True

    def mu_zero_column():
        lams = [tuple(k for _ in range(datum.rank)) for k in range(4)]
        return all(shriek_fiber_approximant(datum, datum.zero, lam) == 1 and
                   star_fiber_approximant(datum, datum.zero, lam) == 1 for lam in lams)

    checks = [
        ("positive_root_pairing", roots_pairing),
        ("positive_roots_eq_length_w0", w0_length),
        ("length_eq_inversions", lengths),
        ("w0_reverses_dominance", w0_dominance),
        ("nonstandard_order_directed", directed),
        ("weyl_dimension_formula", dims),
        ("weyl_invariance", weyl_invariance),
        ("duality", duality),
        ("q_analog_at_one", q_analog_at_one),
        ("q_kostant_vs_multisets", kostant_bruteforce),
        ("sym_two_descriptions", two_descriptions),
        ("chevalley_vs_subsets", chevalley_bruteforce),
        ("delta0_euler_characteristic", delta0_euler),
        ("tensor_full_product", tensor_roundtrip),
        ("mu_zero_column", mu_zero_column),
    ]
    return _suite([_check(name, fn) for name, fn in checks])


# order in which suites appear in a report
SUITE_ORDER = ("fibers", "delta0", "tensor", "plucker", "selftest")
