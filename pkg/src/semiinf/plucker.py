"""Character-level checks of the Drinfeld-Plucker formalism.

The graded algebra O(G-bar/N^-) is the sum over dominant lam of V^lam (x) e^{-lam}.
Only the summands a given Hom computation touches are ever generated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .characters import (
    Character,
    dual_character,
    irr_character,
    minimal_depth,
    stable_tensor_check,
    tensor_decompose,
)
from .fibers import ChainPoint, LambdaChain, StabilizationReport, default_chain, detect_stabilization
from .rootdatum import RootDatum, Weight, dominant_weights_upto

HomCharacter = Character


@dataclass(frozen=True)
class BigradedSummand:
    lam: Weight
    g_character: Character
    t_twist: Weight

    def __post_init__(self) -> None:
        if self.t_twist != tuple(-x for x in self.lam):
            raise ValueError("t_twist must be -lam")


def summand(datum: RootDatum, lam: Sequence[int]) -> BigradedSummand:
    lam = tuple(lam)
    return BigradedSummand(lam, irr_character(datum, lam), tuple(-x for x in lam))


def gn_bar_summands(datum: RootDatum, height_bound: int) -> list[BigradedSummand]:
    """Summands V^lam (x) e^{-lam} with sum of fundamental coordinates of lam <= bound."""
    return [summand(datum, lam) for lam in dominant_weights_upto(datum, height_bound)]


def plucker_hom_character(datum: RootDatum, mu: Sequence[int], lam: Sequence[int]) -> HomCharacter:
    """T-character of Hom(V^mu, e^lam (x) O(G-bar/N^-) (x) (V^lam)^*).

    The summand V^nu (x) e^{-nu} contributes [V^mu (x) V^lam : V^nu] copies of e^{lam - nu}.
    """
    mu, lam = tuple(mu), tuple(lam)
    datum.require_dominant(mu, lam)
    dec = tensor_decompose(datum, mu, lam)
    return Character({tuple(a - b for a, b in zip(lam, nu)): m for nu, m in dec.items()})


def dual_target(datum: RootDatum, mu: Sequence[int]) -> Character:
    """char((V^mu)^*) computed as the character of V^{-w0 mu}."""
    return irr_character(datum, dual_character(datum, mu))


@dataclass
class ColimReport:
    report: StabilizationReport
    a_priori_index: int
    finding: str | None = None

    @property
    def threshold_ok(self) -> bool:
        t = self.report.threshold_index
        return t is not None and t <= self.a_priori_index

    @property
    def status(self) -> str:
        return self.report.status

    def to_json(self) -> dict:
        out = self.report.to_json()
        out["a_priori_threshold"] = self.a_priori_index
        out["threshold_ok"] = self.threshold_ok
        out["finding"] = self.finding
        return out


def verify_as_colim(datum: RootDatum, mu: Sequence[int], chain: LambdaChain | None = None) -> ColimReport:
    """Stabilize the Hom characters along the chain and compare with char((V^mu)^*)."""
    mu = tuple(mu)
    datum.require_dominant(mu)
    chain = chain or default_chain(datum)
    depth = minimal_depth(datum, mu)
    a_priori = chain.index_dominating(depth)
    points = []
    for k, lam in enumerate(chain.steps):
        deep = all(a >= b for a, b in zip(lam, depth))
        points.append(ChainPoint(k, lam, plucker_hom_character(datum, mu, lam), deep=deep))
    stable, value, threshold = detect_stabilization(points)
    target = dual_target(datum, mu)
    rep = StabilizationReport(mu, "plucker", points, stable, value, threshold, target,
                              {"dim": target.dim})
    finding = None
    if stable and threshold is not None and threshold < a_priori:
        finding = f"stabilized at k={threshold}, before the a-priori bound k={a_priori}"
    elif stable and threshold is not None and threshold > a_priori:
        finding = f"threshold k={threshold} exceeds the a-priori bound k={a_priori}"
    return ColimReport(rep, a_priori, finding)


@dataclass
class HeckeVerdict:
    passed: bool
    lam: Weight
    v_highest: Weight
    shifts: dict[Weight, int] = field(default_factory=dict)
    detail: str = ""


def hecke_structure_check(datum: RootDatum, v_highest: Sequence[int], lam: Sequence[int],
                          mu_range: Iterable[Sequence[int]] | None = None) -> HeckeVerdict:
    """Summand-wise reindexing lam -> lam + mu with degree shift <mu, 2rho-check>.

    Raises NotDeepEnough when lam is not deep for V^{v_highest}.
    """
    lam, v_highest = tuple(lam), tuple(v_highest)
    verdict = stable_tensor_check(datum, lam, v_highest)
    weights = irr_character(datum, v_highest)
    mus = list(weights) if mu_range is None else [tuple(m) for m in mu_range]
    shifts = {}
    ok = verdict.passed
    for mu in mus:
        target = tuple(a + b for a, b in zip(lam, mu))
        shift = datum.pairing_2rho(target) - datum.pairing_2rho(lam)
        shifts[mu] = shift
        if shift != datum.pairing_2rho(mu) or verdict.decomposition.get(target, 0) != weights[mu]:
            ok = False
    detail = "" if ok else f"decomposition mismatch: {verdict.witness}"
    return HeckeVerdict(ok, lam, v_highest, shifts, detail)
