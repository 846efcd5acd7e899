"""Verification suites run over a corpus, and the sweep summary they feed."""

from __future__ import annotations

import math
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable

from . import bounds
from .bounds import MODES, BoundReport, binom, bound_report, leading_coefficient, lemma1_sides
from .chromatic import (
    BudgetExceeded,
    ChromaticPolynomial,
    brute_force_colorings,
    check_proposition1,
    chromatic_polynomial,
    coefficients_via_broken_circuits,
    evaluate,
    verify_additivity,
)
from .cycles import CycleCensus, cycle_census, verify_lemma2
from .graph import Graph

WITNESS_CAP = 25
ORACLE_MAX_V = 8
WHITNEY_MAX_E = 15
WORK_CAP = 10**9


class GraphData:
    """Per-graph results shared between suites."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def poly(self) -> ChromaticPolynomial:
        return chromatic_polynomial(self.g, cache=True)

    @cached_property
    def census(self) -> CycleCensus:
        return cycle_census(self.g)

    @property
    def cyclic(self) -> bool:
        return self.census.girth != math.inf

    def report(self, mode: str) -> BoundReport:
        key = f"_report_{mode}"
        if key not in self.__dict__:
            self.__dict__[key] = bound_report(self.g, mode, exact=self.poly, census=self.census)
        return self.__dict__[key]


@dataclass
class SuiteResult:
    name: str
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    findings: list[dict] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    # checks whose every failure must be kept, not just the first WITNESS_CAP
    keep_all: frozenset[str] = frozenset()

    def record(self, check: str, ok: bool, witness: Callable[[], dict] | None = None) -> bool:
        if ok:
            self.passed[check] += 1
        else:
            self.failed[check] += 1
            if witness is not None and (check in self.keep_all or self.failed[check] <= WITNESS_CAP):
                self.witnesses.append({"check": check, **witness()})
        return ok

    @property
    def ok(self) -> bool:
        return not sum(self.failed.values())

    def to_dict(self) -> dict:
        checks = sorted(set(self.passed) | set(self.failed))
        return {
            "suite": self.name,
            "ok": self.ok,
            "checks": {c: {"pass": self.passed[c], "fail": self.failed[c]} for c in checks},
            "witnesses": self.witnesses,
            "witnessesTruncated": {
                c: n - WITNESS_CAP for c, n in sorted(self.failed.items())
                if c not in self.keep_all and n > WITNESS_CAP
            },
            "findings": self.findings,
            "skipped": self.skipped,
            "stats": self.stats,
        }

    def lines(self) -> list[str]:
        out = []
        for c in sorted(set(self.passed) | set(self.failed)):
            status = "PASS" if not self.failed[c] else "FAIL"
            out.append(f"{status} {self.name}/{c}: {self.passed[c]} passed, {self.failed[c]} failed")
        if self.findings:
            out.append(f"NOTE {self.name}: {len(self.findings)} findings")
        for s in self.skipped:
            out.append(f"SKIP {self.name}: {s}")
        return out


def _edge(g: Graph, edge_id: int) -> list[int]:
    e = g.edge(edge_id)
    return [e.u, e.v]


# ----------------------------------------------------------------------------
# suites
# ----------------------------------------------------------------------------

def suite_lemma1(data: list[GraphData], limit: int = 30) -> SuiteResult:
    res = SuiteResult("lemma1")
    for a in range(1, limit + 1):
        for b in range(a):
            for c in range(b + 1):
                left, right = lemma1_sides(a, b, c)
                res.record("telescoping", left == right, lambda: {"a": a, "b": b, "c": c, "left": str(left), "right": str(right)})
    return res


def suite_lemma2(data: list[GraphData]) -> SuiteResult:
    res = SuiteResult("lemma2")
    for d in data:
        g = d.g
        for e in sorted(g.edges, key=lambda e: e.id):
            rep = verify_lemma2(g, e.id, census=d.census)
            base = {"graph": g.name, "edgeList": g.to_edge_list(), "edge": [e.u, e.v]}
            res.record("deleted-size", rep.deleted_counts_ok, lambda: base)
            res.record("contracted-size", rep.contracted_counts_ok, lambda: {**base, "ell3": rep.ell3})
            for row in rep.rows:
                detail = lambda: {**base, "n": row.n, "predicted": row.contracted_predicted, "measured": row.contracted_measured}
                res.record("deletion", row.deleted_match, lambda: {**base, "n": row.n, "predicted": row.deleted_predicted, "measured": row.deleted_measured})
                if rep.case == "i":
                    res.record("contraction-case-i", row.contracted_match,
                               lambda: {**detail(), "chordCorrected": row.chord_corrected})
                    res.record("contraction-case-i-chord-corrected", row.contracted_measured == row.chord_corrected, detail)
                elif row.contracted_match:
                    res.passed["contraction-case-ii"] += 1
                else:
                    res.findings.append({"case": "ii", "graph": g.name, "edge": [e.u, e.v], "n": row.n,
                                         "predicted": row.contracted_predicted, "measured": row.contracted_measured})
    res.stats["caseIIMismatches"] = len(res.findings)
    return res


def suite_additivity(data: list[GraphData]) -> SuiteResult:
    res = SuiteResult("additivity")
    for d in data:
        for e in sorted(d.g.edges, key=lambda e: e.id):
            rep = verify_additivity(d.g, e.id, exact=d.poly)
            res.record("a_r = a'_r + a''_r", rep.ok, lambda: {
                "graph": d.g.name, "edgeList": d.g.to_edge_list(), "edge": [e.u, e.v],
                "failedR": [r for r, ok in rep.rows if not ok],
            })
    return res


def suite_leading(data: list[GraphData]) -> SuiteResult:
    res = SuiteResult("leading")
    for d in data:
        g, p = d.g, d.poly
        wit = lambda: {"graph": g.name, "edgeList": g.to_edge_list(), "a": [str(x) for x in p.magnitudes]}
        res.record("a_v = 1", p.a(g.v) == 1, wit)
        if g.v >= 2:
            res.record("a_(v-1) = e", p.a(g.v - 1) == g.e, wit)
        if not d.cyclic:
            continue
        gi = int(d.census.girth)
        kg = d.census.k(gi)
        res.record("a_(v-g+1) = C(e,g-1) - k_g", p.a(g.v - gi + 1) == binom(g.e, gi - 1) - kg, wit)
        for r in range(g.v - gi + 1, g.v + 1):
            res.record("leading rows", leading_coefficient(g.e, g.v, gi, kg, r) == p.a(r),
                       lambda: {**wit(), "r": r})
    return res


def suite_theorem1(data: list[GraphData]) -> SuiteResult:
    res = SuiteResult("theorem1", keep_all=frozenset({"soundness"}))
    ratios: dict[int, list[Fraction]] = defaultdict(list)
    for d in data:
        if not d.cyclic:
            res.skipped.append(f"{d.g.name}: acyclic, bounds undefined")
            continue
        for mode in MODES:
            rep = d.report(mode)
            for row in rep.rows:
                def wit(row=row, rep=rep):
                    return {
                        "graph": rep.name, "edgeList": rep.edge_list, "mode": rep.mode, "r": row.r,
                        "edge": list(row.choice.endpoints), "lg": row.choice.lg,
                        "lgp1star": row.choice.lgp1star, "S": str(row.choice.s_value),
                        "exact": str(row.exact), "liTian": str(row.li_tian),
                        "improved": str(row.improved), "improvedAlt": str(row.improved_alt),
                    }
                res.record("soundness", row.bound_holds, wit)
                res.record("dominance", row.dominates_li_tian, wit)
                res.record("forms agree", row.forms_agree, wit)
                if rep.kg == 1 and row.choice.lg == 1:
                    res.record("reduction", row.improved == row.li_tian, wit)
                if row.leading:
                    res.record("leading tightness", row.improved == row.exact, wit)
                if mode == "per-r" and row.exact:
                    ratios[rep.v - row.r].append(Fraction(row.improved, row.exact))
    res.stats["improvedOverExactByDistance"] = {
        str(k): {"rows": len(v), "mean": round(float(sum(v) / len(v)), 6), "max": round(float(max(v)), 6)}
        for k, v in sorted(ratios.items())
    }
    return res


def suite_prop1(data: list[GraphData]) -> SuiteResult:
    res = SuiteResult("prop1")
    profiles: Counter = Counter()
    for d in data:
        g, p = d.g, d.poly
        rep = check_proposition1(p, g.e)
        wit = lambda: {"graph": g.name, "edgeList": g.to_edge_list(), "a": [str(x) for x in p.magnitudes]}
        if g.e >= 2:
            res.record("chain fails (e >= 2)", not rep.chain_holds, wit)
        elif g.e == 1:
            res.record("chain holds (e = 1)", rep.chain_holds, wit)
        if g.e >= 1:
            res.record("P(G,1) = 0", rep.value_at_one == 0, wit)
        res.record("P(G,0) = 0", evaluate(p, 0) == 0, wit)
        res.record("a_r > 0", all(a > 0 for a in p.magnitudes) or not g.is_connected, wit)
        profiles[len(rep.peak_positions)] += 1
        mags = p.magnitudes
        peak = rep.peak_positions[0]
        unimodal = all(mags[i] <= mags[i + 1] for i in range(peak - 1)) and all(
            mags[i] >= mags[i + 1] for i in range(peak - 1, len(mags) - 1))
        if not unimodal or len(rep.peak_positions) > 2:
            res.findings.append({"graph": g.name, "peaks": rep.peak_positions, "unimodal": unimodal})
    res.stats["peakCountHistogram"] = {str(k): v for k, v in sorted(profiles.items())}
    return res


def edge_orders(g: Graph, count: int = 3) -> list[list[int]]:
    ids = sorted(e.id for e in g.edges)
    orders = [ids, ids[::-1]]
    rng = random.Random(g.name + g.to_edge_list())
    while len(orders) < count:
        shuffled = ids[:]
        rng.shuffle(shuffled)
        orders.append(shuffled)
    return orders[:count]


def suite_oracles(data: list[GraphData], work_cap: int = WORK_CAP) -> SuiteResult:
    res = SuiteResult("oracles")
    for d in data:
        g, p = d.g, d.poly
        if g.v <= ORACLE_MAX_V:
            try:
                for q in range(g.v + 1):
                    count = brute_force_colorings(g, q, work_cap=work_cap)
                    res.record("brute force", evaluate(p, q) == count, lambda: {
                        "graph": g.name, "edgeList": g.to_edge_list(), "q": q,
                        "polynomial": str(evaluate(p, q)), "colorings": str(count)})
            except BudgetExceeded as exc:
                res.skipped.append(f"{g.name}: brute force {exc}")
        else:
            res.skipped.append(f"{g.name}: brute force limited to v <= {ORACLE_MAX_V}")
        if g.e <= WHITNEY_MAX_E:
            for order in edge_orders(g):
                nbc = coefficients_via_broken_circuits(g, order)
                res.record("broken circuits", nbc == p, lambda: {
                    "graph": g.name, "edgeList": g.to_edge_list(), "order": order,
                    "nbc": [str(x) for x in nbc.magnitudes]})
        else:
            res.skipped.append(f"{g.name}: broken circuits limited to e <= {WHITNEY_MAX_E}")
    return res


SUITES: dict[str, Callable[[list[GraphData]], SuiteResult]] = {
    "lemma1": suite_lemma1,
    "lemma2": suite_lemma2,
    "additivity": suite_additivity,
    "leading": suite_leading,
    "theorem1": suite_theorem1,
    "prop1": suite_prop1,
    "oracles": suite_oracles,
}


@dataclass
class SweepSummary:
    graphs: list[str]
    suites: dict[str, SuiteResult]
    skipped: list[str] = field(default_factory=list)
    negative_top_binomials: int = 0

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites.values())

    def to_dict(self) -> dict:
        return {
            "graphsProcessed": len(self.graphs),
            "graphs": self.graphs,
            "ok": self.ok,
            "skipped": self.skipped,
            "negativeTopBinomials": self.negative_top_binomials,
            "suites": {name: s.to_dict() for name, s in sorted(self.suites.items())},
        }


def run_suites(graphs: list[Graph], names: list[str], skipped: list[str] | None = None) -> SweepSummary:
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)}")
    data = [GraphData(g) for g in sorted(graphs, key=lambda g: g.name)]
    before = bounds.negative_top_hits
    results = {name: SUITES[name](data) for name in names}
    return SweepSummary(
        graphs=[d.g.name for d in data],
        suites=results,
        skipped=list(skipped or []),
        negative_top_binomials=bounds.negative_top_hits - before,
    )
