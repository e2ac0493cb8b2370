"""Finite-lambda approximants to the !- and *-fibers along a cofinal chain, and stabilization.

For mu in -Lambda^pos the k-th approximant is read off V^{lam_k} at the weight lam_k + mu:
the !-side through the Lusztig q-analog m^{lam_k}_{lam_k+mu}(q), the *-side through the
weight multiplicity dim V^{lam_k}(lam_k + mu).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .characters import weight_multiplicity
from .errors import NotDominant, SkippedNotDominant
from .qgradings import (
    delta0_shriek_fiber,
    lusztig_q_analog,
    neg_cone_points,
    neg_cone_root,
    neg_weight,
    oN_weight_dim,
    sym_gmodb_graded,
    sym_nminus_graded,
)
from .qpoly import QPolynomial
from .rootdatum import RootDatum, Weight

DEFAULT_K_MAX = 12
WINDOW = 3


@dataclass(frozen=True)
class LambdaChain:
    """lam_k = k * generator, k = 0..k_max; cofinal in (Lambda^+, <=) when generator > 0."""

    generator: Weight
    k_max: int = DEFAULT_K_MAX

    def __post_init__(self) -> None:
        if any(c <= 0 for c in self.generator):
            raise NotDominant(f"chain generator {self.generator} must be strictly dominant to be cofinal")
        if self.k_max < 0:
            raise ValueError("k_max must be nonnegative")

    @property
    def steps(self) -> list[Weight]:
        return [self.point(k) for k in range(self.k_max + 1)]

    def point(self, k: int) -> Weight:
        return tuple(k * c for c in self.generator)

    def index_dominating(self, lam: Sequence[int]) -> int:
        """Least k with lam <= lam_k in the non-standard order (may exceed k_max)."""
        return max((-(-c // g) for c, g in zip(lam, self.generator)), default=0)


DEFAULT_GENERATOR_SCALE = 2


def default_chain(datum: RootDatum, k_max: int = DEFAULT_K_MAX) -> LambdaChain:
    """Multiples of 2 rho (all-twos), which lies in the root lattice for every type.

    With the all-ones generator, mu = -6 alpha_i only becomes admissible at k = 12, leaving
    a single valid point in a 0..12 chain; all-twos leaves at least seven.
    """
    return LambdaChain((DEFAULT_GENERATOR_SCALE,) * datum.rank, k_max)


@dataclass
class ChainPoint:
    k: int
    lam: Weight
    value: Any
    skipped: bool = False
    deep: bool = False

    def to_json(self) -> dict:
        val = self.value.to_json() if isinstance(self.value, QPolynomial) else _jsonable(self.value)
        return {"k": self.k, "lam": list(self.lam), "value": val, "skipped": self.skipped, "deep": self.deep}


def _jsonable(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    return value


@dataclass
class StabilizationReport:
    mu: Weight
    kind: str
    history: list[ChainPoint]
    stable: bool
    stable_value: Any
    threshold_index: int | None
    target: Any = None
    metadata: dict = field(default_factory=dict)

    @property
    def matches_target(self) -> bool:
        return self.stable and self.stable_value == self.target

    @property
    def status(self) -> str:
        if not self.stable:
            return "REPORT"
        return "PASS" if self.stable_value == self.target else "FAIL"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "mu": list(self.mu),
            "stable": self.stable,
            "stable_value": _jsonable(self.stable_value) if self.stable else None,
            "threshold": self.threshold_index,
            "target": _jsonable(self.target),
            "status": self.status,
            "metadata": self.metadata,
            "history": [p.to_json() for p in self.history],
        }


def detect_stabilization(points: Sequence[ChainPoint], window: int = WINDOW):
    """(stable, value, threshold): the trailing constant run of valid points must contain
    ``window`` consecutive deep points. The threshold is the k at which that run begins."""
    valid = [p for p in points if not p.skipped]
    if not valid:
        return False, None, None
    last = valid[-1].value
    run: list[ChainPoint] = []
    for p in reversed(valid):
        if p.value != last:
            break
        run.append(p)
    run.reverse()
    deep_tail = 0
    for p in reversed(run):
        if not p.deep:
            break
        deep_tail += 1
    if deep_tail < window:
        return False, None, None
    return True, last, run[0].k


def _deep_for_mu(lam: Sequence[int], height: int) -> bool:
    return all(c > height for c in lam)


# ------------------------------------------------------------------ !-fibers
def shriek_fiber_approximant(datum: RootDatum, mu: Sequence[int], lam: Sequence[int]) -> QPolynomial:
    mu, lam = tuple(mu), tuple(lam)
    datum.require_dominant(lam)
    nu = tuple(a + b for a, b in zip(lam, mu))
    if not datum.is_dominant(nu):
        raise SkippedNotDominant(f"lam={lam} + mu={mu} = {nu} is not dominant")
    return lusztig_q_analog(datum, lam, nu)


def _run_chain(datum, mu, chain, approx: Callable, kind: str, target, skippable: bool) -> StabilizationReport:
    beta = neg_cone_root(datum, mu)
    height = sum(beta)
    points = []
    for k, lam in enumerate(chain.steps):
        deep = _deep_for_mu(lam, height)
        try:
            points.append(ChainPoint(k, lam, approx(datum, mu, lam), deep=deep))
        except SkippedNotDominant:
            if not skippable:
                raise
            points.append(ChainPoint(k, lam, None, skipped=True, deep=deep))
    stable, value, threshold = detect_stabilization(points)
    meta = {"degree": datum.pairing_2rho(mu), "height": height}
    return StabilizationReport(tuple(mu), kind, points, stable, value, threshold, target, meta)


def shriek_fiber_stable(datum: RootDatum, mu: Sequence[int], chain: LambdaChain | None = None) -> StabilizationReport:
    """Stabilized !-fiber; its target is the graded character of Sym(g/b^-[-2]) at -mu."""
    chain = chain or default_chain(datum)
    target = sym_gmodb_graded(datum, mu)
    return _run_chain(datum, mu, chain, shriek_fiber_approximant, "shriek", target, skippable=True)


# ------------------------------------------------------------------ *-fibers
def star_fiber_approximant(datum: RootDatum, mu: Sequence[int], lam: Sequence[int]) -> int:
    lam = tuple(lam)
    return weight_multiplicity(datum, lam, tuple(a + b for a, b in zip(lam, mu)))


def star_fiber_stable(datum: RootDatum, mu: Sequence[int], chain: LambdaChain | None = None) -> StabilizationReport:
    """Stabilized *-fiber dimension (single cohomological degree <mu, 2rho-check>)."""
    chain = chain or default_chain(datum)
    target = oN_weight_dim(datum, mu)
    return _run_chain(datum, mu, chain, star_fiber_approximant, "star", target, skippable=False)


# ------------------------------------------------------------------ tables
@dataclass
class FiberEntry:
    beta: tuple[int, ...]
    mu: Weight
    shriek: StabilizationReport
    star: StabilizationReport
    target_shriek: QPolynomial
    target_star_dim: int
    delta0: QPolynomial
    nminus: QPolynomial

    @property
    def approximants_positive(self) -> bool:
        """Every valid !-approximant at mu != 0 has zero constant term."""
        if not any(self.beta):
            return True
        return all(p.skipped or (p.value.min_degree or 0) >= 1 for p in self.shriek.history)

    @property
    def delta0_positive(self) -> bool:
        if not any(self.beta):
            return self.delta0 == 1
        return self.delta0.min_degree is not None and self.delta0.min_degree >= 1

    @property
    def status(self) -> str:
        checks = [
            self.approximants_positive,
            self.delta0_positive,
            self.nminus == self.target_shriek,
            self.shriek.status != "FAIL",
            self.star.status != "FAIL",
        ]
        if not all(checks):
            return "FAIL"
        if self.shriek.status == "REPORT" or self.star.status == "REPORT":
            return "REPORT"
        return "PASS"

    def to_json(self) -> dict:
        height = sum(self.beta)
        return {
            "mu": [-x for x in self.beta],
            "mu_weight": list(self.mu),
            "shriek_stable": self.shriek.stable_value.to_json() if self.shriek.stable else None,
            "shriek_threshold": self.shriek.threshold_index,
            "star_stable": self.star.stable_value if self.star.stable else None,
            "star_threshold": self.star.threshold_index,
            "star_degree": self.star.metadata["degree"],
            "target": {
                "shriek": self.target_shriek.to_json(),
                "nminus": self.nminus.to_json(),
                "star_dim": self.target_star_dim,
            },
            "delta0": self.delta0.to_json(),
            "bookkeeping": {
                "pairing_2rho": self.star.metadata["degree"],
                "codim_global": height,
                "codim_local": 2 * height,
            },
            "checks": {
                "approximants_positive": self.approximants_positive,
                "delta0_positive": self.delta0_positive,
                "two_descriptions_agree": self.nminus == self.target_shriek,
            },
            "status": self.status,
        }


@dataclass
class FiberTable:
    fingerprint: str
    chain: LambdaChain
    entries: dict[tuple[int, ...], FiberEntry]

    def validate(self) -> bool:
        """Every stable value agrees with its closed form."""
        for e in self.entries.values():
            if e.shriek.stable and e.shriek.stable_value != e.target_shriek:
                return False
            if e.star.stable and e.star.stable_value != e.target_star_dim:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "chain": {"generator": list(self.chain.generator), "k_max": self.chain.k_max},
            "entries": [e.to_json() for e in self.entries.values()],
        }


def fiber_entry(datum: RootDatum, beta: Sequence[int], chain: LambdaChain) -> FiberEntry:
    mu = neg_weight(datum, beta)
    shriek = shriek_fiber_stable(datum, mu, chain)
    star = star_fiber_stable(datum, mu, chain)
    return FiberEntry(
        beta=tuple(beta), mu=mu, shriek=shriek, star=star,
        target_shriek=shriek.target, target_star_dim=star.target,
        delta0=delta0_shriek_fiber(datum, mu),
        nminus=sym_nminus_graded(datum, mu),
    )


def fiber_table(datum: RootDatum, mu_height_bound: int, chain: LambdaChain | None = None) -> FiberTable:
    if mu_height_bound < 0:
        raise ValueError("height bound must be >= 0")
    chain = chain or default_chain(datum)
    entries = {}
    for beta in neg_cone_points(datum, mu_height_bound):
        entries[beta] = fiber_entry(datum, beta, chain)
    return FiberTable(datum.fingerprint, chain, entries)


@dataclass
class HeartVerdict:
    passed: bool
    dims: dict[tuple[int, ...], int]
    mismatches: list[tuple[int, ...]]
    unstable: list[tuple[int, ...]]


def heart_character_check(datum: RootDatum, mu_height_bound: int,
                          chain: LambdaChain | None = None) -> HeartVerdict:
    """Stable *-dimensions versus the weight spaces of the coordinate ring of N."""
    chain = chain or default_chain(datum)
    dims, bad, unstable = {}, [], []
    for beta in neg_cone_points(datum, mu_height_bound):
        mu = neg_weight(datum, beta)
        rep = star_fiber_stable(datum, mu, chain)
        if not rep.stable:
            unstable.append(beta)
            continue
        dims[beta] = rep.stable_value
        if rep.stable_value != oN_weight_dim(datum, mu):
            bad.append(beta)
    return HeartVerdict(not bad and not unstable, dims, bad, unstable)
