"""Acceptance criteria 1-8. Each test prints one line ``criterion N: PASS|FAIL ...``.

Run alone with ``pytest -v -s tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
"""
import subprocess
import sys
import time

import pytest

from semiinf import oracles
from semiinf.characters import _spread, irr_character, weight_multiplicity
from semiinf.cli import main, parse_config, run_suites
from semiinf.fibers import default_chain, shriek_fiber_stable, star_fiber_stable
from semiinf.plucker import plucker_hom_character, verify_as_colim
from semiinf.qgradings import (
    delta0_shriek_fiber,
    lusztig_q_analog,
    neg_cone_points,
    neg_weight,
    q_kostant,
    sym_gmodb_graded,
    sym_nminus_graded,
)
from semiinf.qpoly import QPolynomial
from semiinf.report import dumps_json, parse_report
from semiinf.rootdatum import build_root_datum, cartan_from_type, datum_for, dominant_weights_upto
from semiinf.suites import tensor_entry, tensor_grid

ALL_TYPES = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4",
             "C2", "C3", "C4", "D4", "G2", "F4"]


def fresh(symbol):
    """A datum with empty caches, so timings include every computation."""
    return build_root_datum(cartan_from_type(symbol), label=symbol)


def verdict(n, failures, checked, detail=""):
    line = f"criterion {n}: {'PASS' if not failures else 'FAIL'}  ({checked} checked, {len(failures)} failed)"
    if detail:
        line += f"  {detail}"
    if failures:
        line += f"  first failure: {failures[0]}"
    print(line, flush=True)
    return line


def emit_line(capsys, *args):
    if capsys is None:
        return verdict(*args)
    with capsys.disabled():
        print()
        return verdict(*args)


# ------------------------------------------------------------ 1 and 3
def _fiber_criterion(kind, capsys=None):
    failures, checked, times = [], 0, {}
    for symbol in ["A1", "A2", "B2", "C2"]:
        d = fresh(symbol)
        chain = default_chain(d, 12)
        start = time.perf_counter()
        for beta in neg_cone_points(d, 6):
            mu = neg_weight(d, beta)
            checked += 1
            if kind == "shriek":
                rep = shriek_fiber_stable(d, mu, chain)
                want = q_kostant(d, beta)
                if want != oracles.q_kostant_multisets(d, beta):
                    failures.append((symbol, beta, "q_kostant disagrees with multiset enumeration"))
            else:
                rep = star_fiber_stable(d, mu, chain)
                want = oracles.q_kostant_multisets(d, beta)(1)
            if not (rep.stable and rep.threshold_index <= 12 and rep.stable_value == want):
                failures.append((symbol, beta, rep.stable_value, want))
        times[symbol] = time.perf_counter() - start
        if times[symbol] >= 60:
            failures.append((symbol, f"took {times[symbol]:.1f}s"))
    detail = "max " + f"{max(times.values()):.2f}s per type"
    return failures, checked, detail


def test_criterion_1_shriek_stable(capsys):
    failures, checked, detail = _fiber_criterion("shriek")
    emit_line(capsys, 1, failures, checked, detail)
    assert not failures


# ------------------------------------------------------------ 2
def _criterion_2():
    failures, checked = [], 0
    for symbol in ["A1", "A2", "C2"]:
        d = datum_for(symbol)
        for lam in dominant_weights_upto(d, 20):
            if d.pairing_2rho(lam) > 20:
                continue
            # every weight of V^lam, plus a band of zero multiplicities below it
            reach = _spread(d, lam) + 2
            for beta in neg_cone_points(d, reach):
                nu = tuple(a - b for a, b in zip(lam, d.from_root(beta)))
                checked += 1
                if lusztig_q_analog(d, lam, nu)(1) != weight_multiplicity(d, lam, nu):
                    failures.append((symbol, lam, nu))
    return failures, checked


def test_criterion_2_q_analog_at_one(capsys):
    failures, checked = _criterion_2()
    emit_line(capsys, 2, failures, checked)
    assert not failures


def test_criterion_3_star_stable(capsys):
    failures, checked, detail = _fiber_criterion("star")
    emit_line(capsys, 3, failures, checked, detail)
    assert not failures


# ------------------------------------------------------------ 4
def _criterion_4():
    failures, checked = [], 0
    for symbol in ["A1", "A2", "C2"]:
        d = datum_for(symbol)
        for lam, v in tensor_grid(d, 27):
            checked += 1
            entry = tensor_entry(d, lam, v)
            if not (entry["status"] == "PASS" and entry["oracle_agrees"] and entry["full_product_agrees"]):
                failures.append((symbol, lam, v))
    return failures, checked


def test_criterion_4_stable_tensor(capsys):
    failures, checked = _criterion_4()
    emit_line(capsys, 4, failures, checked)
    assert not failures and checked > 0


# ------------------------------------------------------------ 5
def _criterion_5():
    failures, checked = [], 0
    for symbol in ["A1", "A2"]:
        d = datum_for(symbol)
        chain = default_chain(d)
        for mu in dominant_weights_upto(d, 4):
            checked += 1
            rep = verify_as_colim(d, mu, chain)
            target = irr_character(d, mu).negated()
            r = rep.report
            ok = r.stable and r.stable_value == target and rep.threshold_ok
            if ok:
                lam = chain.point(r.threshold_index)
                ok = oracles.hom_character_bruteforce(d, mu, lam) == target
            if not ok:
                failures.append((symbol, mu, r.threshold_index, rep.a_priori_index))
    return failures, checked


def test_criterion_5_plucker_colimit(capsys):
    failures, checked = _criterion_5()
    emit_line(capsys, 5, failures, checked)
    assert not failures


# ------------------------------------------------------------ 6
def _delta0_oracle(d, beta):
    total = QPolynomial()
    for b1 in neg_cone_points(d, sum(beta)):
        b2 = tuple(x - y for x, y in zip(beta, b1))
        if all(c >= 0 for c in b2):
            total = total + oracles.q_kostant_multisets(d, b1) * oracles.chevalley_subsets(d, b2)
    return total


def _criterion_6():
    failures, checked = [], 0
    for symbol in ["A1", "A2", "C2"]:
        d = datum_for(symbol)
        for beta in neg_cone_points(d, 8):
            checked += 1
            p = delta0_shriek_fiber(d, neg_weight(d, beta))
            if any(beta):
                ok = p.min_degree is not None and p.min_degree >= 1
            else:
                ok = p == 1
            if sum(beta) <= 5 and p != _delta0_oracle(d, beta):
                ok = False
            if not ok:
                failures.append((symbol, beta, str(p)))
    return failures, checked


def test_criterion_6_delta0_positivity(capsys):
    failures, checked = _criterion_6()
    emit_line(capsys, 6, failures, checked)
    assert not failures


# ------------------------------------------------------------ 7
def _criterion_7():
    failures, checked = [], 0
    for symbol in ALL_TYPES:
        d = datum_for(symbol)
        for beta in neg_cone_points(d, 8):
            checked += 1
            mu = neg_weight(d, beta)
            if sym_nminus_graded(d, mu) != sym_gmodb_graded(d, mu):
                failures.append((symbol, beta))
    return failures, checked


def test_criterion_7_two_descriptions(capsys):
    failures, checked = _criterion_7()
    emit_line(capsys, 7, failures, checked, f"{len(ALL_TYPES)} types")
    assert not failures


# ------------------------------------------------------------ 8
def _criterion_8(tmp_path):
    failures, checked = [], 0
    for symbol in ["A2", "C2"]:
        args = ["--type", symbol, "--mu-height", "3", "--format", "json"]
        outs = []
        for run in range(2):
            path = tmp_path / f"{symbol}_{run}.json"
            proc = subprocess.run([sys.executable, "-m", "semiinf", *args, "--out", str(path)])
            outs.append(path.read_bytes() if proc.returncode == 0 else None)
        checked += 1
        if outs[0] is None or outs[0] != outs[1]:
            failures.append((symbol, "runs differ"))
        report = run_suites(parse_config(args))
        text = dumps_json(report)
        checked += 1
        if parse_report(text) != report or dumps_json(parse_report(text)).encode() != text.encode():
            failures.append((symbol, "round trip"))
        if outs[0] is not None and outs[0] != text.encode():
            failures.append((symbol, "in-process and subprocess output differ"))
    return failures, checked


def test_criterion_8_determinism_roundtrip(capsys, tmp_path):
    failures, checked = _criterion_8(tmp_path)
    emit_line(capsys, 8, failures, checked)
    assert not failures


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    results = [
        _fiber_criterion("shriek"),
        _criterion_2(),
        _fiber_criterion("star"),
        _criterion_4(),
        _criterion_5(),
        _criterion_6(),
        _criterion_7(),
    ]
    bad = 0
    for n, res in enumerate(results, start=1):
        bad += bool(res[0])
        verdict(n, *res)
    with tempfile.TemporaryDirectory() as tmp:
        res = _criterion_8(Path(tmp))
        bad += bool(res[0])
        verdict(8, *res)
    sys.exit(1 if bad else 0)
