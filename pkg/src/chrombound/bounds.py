"""Upper bounds on chromatic coefficient magnitudes.

All binomials go through :func:`binom`, whose conventions (``b == 0`` gives
1 before any other rule, ``b < 0`` or ``b > a`` gives 0) decide the value of
every boundary term below.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field

from .chromatic import ChromaticPolynomial, chromatic_polynomial
from .cycles import CycleCensus, cycle_census
from .graph import Graph

log = logging.getLogger(__name__)

MODES = ("per-r", "fixed")

# count of binom(a, 0) calls with a < 0; sweeps report it
negative_top_hits = 0


def binom(a: int, b: int) -> int:
    global negative_top_hits
    if b == 0:
        if a < 0:
            negative_top_hits += 1
            log.debug("binom(%d, 0) with negative top taken as 1", a)
        return 1
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def lemma1_sides(a: int, b: int, c: int) -> tuple[int, int]:
    """Both sides of -C(a,c) + C(b,c) = -sum_{n=1}^{a-b} C(a-n, c-1)."""
    if not a > b >= c >= 0:
        raise ValueError(f"need a > b >= c >= 0, got a={a}, b={b}, c={c}")
    left = -binom(a, c) + binom(b, c)
    right = -sum(binom(a - n, c - 1) for n in range(1, a - b + 1))
    return left, right


def leading_coefficient(e: int, v: int, g: int, kg: int, r: int) -> int | None:
    """Exact a_r for the leading rows r >= v-g+1, None below them."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if r > v - g + 1:
        return binom(e, v - r)
    if r == v - g + 1:
        return binom(e, v - r) - kg
    return None


@dataclass(frozen=True)
class BoundParams:
    e: int
    v: int
    g: int
    kg: int
    lg: int
    lgp1star: int
    r: int

    def __post_init__(self):
        if not 3 <= self.g <= self.v:
            raise ValueError(f"girth {self.g} outside 3..v={self.v}")
        if self.kg < 1 or not 0 <= self.lg <= self.kg or self.lgp1star < 0:
            raise ValueError(f"inconsistent circuit counts kg={self.kg} lg={self.lg} lgp1star={self.lgp1star}")
        if not 1 <= self.r <= self.v:
            raise ValueError(f"r={self.r} outside 1..v={self.v}")


def li_tian_bound(p: BoundParams) -> int:
    e, g, d = p.e, p.g, p.v - p.r
    return binom(e, d) - binom(e - g + 2, d - g + 2) + binom(e - p.kg - g + 2, d - g + 2)


def s_term(p: BoundParams) -> int:
    e, g, d = p.e, p.g, p.v - p.r
    return sum(
        binom(e - g + 1 - n - m, d - g)
        for n in range(1, p.kg - p.lg + 1)
        for m in range(1, p.lg)
    )


def triangle_term(p: BoundParams) -> int:
    """The extra correction present only at girth 3."""
    if p.g != 3:
        return 0
    e, g, d = p.e, p.g, p.v - p.r
    return sum(
        binom(e - p.lg - g + 1 - n, d - g)
        for n in range(1, p.kg + p.lgp1star - p.lg + 1)
    )


def improved_bound(p: BoundParams) -> int:
    return li_tian_bound(p) - s_term(p) - triangle_term(p)


def improved_bound_alt(p: BoundParams) -> int:
    """The same bound written without the double sums."""
    e, g, kg, lg, d = p.e, p.g, p.kg, p.lg, p.v - p.r
    out = (
        binom(e, d)
        - binom(e - g + 2, d - g + 2)
        + binom(e - lg - g + 2, d - g + 2)
        - binom(e - g + 1, d - g + 2)
        + binom(e - kg + lg - g + 1, d - g + 2)
    )
    if g == 3:
        out -= binom(e - lg - g + 1, d - g + 1) - binom(e - kg - p.lgp1star - g + 1, d - g + 1)
    return out


# ----------------------------------------------------------------------------
# edge choice and reports
# ----------------------------------------------------------------------------

class AcyclicGraphError(ValueError):
    """Bounds need a finite girth."""


@dataclass(frozen=True)
class EdgeChoice:
    edge_id: int
    endpoints: tuple[int, int]
    lg: int
    lgp1star: int
    s_value: int
    mode: str


def _params(g: Graph, census: CycleCensus, edge_id: int, r: int) -> BoundParams:
    gi = int(census.girth)
    return BoundParams(
        e=g.e, v=g.v, g=gi, kg=census.k(gi),
        lg=census.ell(edge_id, gi),
        lgp1star=census.ell_star(edge_id, gi + 1),
        r=r,
    )


def select_edge(g: Graph, census: CycleCensus, r: int, mode: str = "per-r") -> EdgeChoice:
    """Edge on a girth circuit with the largest total correction at r (r=1 when fixed)."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if census.girth == math.inf:
        raise AcyclicGraphError("graph has no circuit; girth and the bounds are undefined")
    at = 1 if mode == "fixed" else r
    gi = int(census.girth)
    best = None
    for e in sorted(g.edges, key=lambda e: e.id):
        if census.ell(e.id, gi) < 1:
            continue
        p = _params(g, census, e.id, at)
        score = s_term(p) + triangle_term(p)
        if best is None or score > best[0]:
            best = (score, e)
    _, e = best
    p = _params(g, census, e.id, r)
    return EdgeChoice(e.id, (e.u, e.v), p.lg, p.lgp1star, s_term(p), mode)


def fixed_choice(g: Graph, census: CycleCensus, edge_id: int, r: int) -> EdgeChoice:
    """EdgeChoice for a caller-named edge, which must lie on a girth circuit."""
    if census.girth == math.inf:
        raise AcyclicGraphError("graph has no circuit; girth and the bounds are undefined")
    e = g.edge(edge_id)
    if census.ell(edge_id, int(census.girth)) < 1:
        raise ValueError(f"edge {e.u}-{e.v} lies on no circuit of length {int(census.girth)}")
    p = _params(g, census, edge_id, r)
    return EdgeChoice(edge_id, (e.u, e.v), p.lg, p.lgp1star, s_term(p), "edge")


@dataclass
class BoundRow:
    r: int
    exact: int
    li_tian: int
    improved: int
    improved_alt: int
    choice: EdgeChoice
    triangle: int
    leading: bool

    @property
    def bound_holds(self) -> bool:
        return self.improved >= self.exact

    @property
    def dominates_li_tian(self) -> bool:
        return self.improved <= self.li_tian

    @property
    def tight_at_leading(self) -> bool | None:
        return self.improved == self.exact if self.leading else None

    @property
    def forms_agree(self) -> bool:
        return self.improved == self.improved_alt

    def flags(self) -> dict[str, bool | None]:
        return {
            "boundHolds": self.bound_holds,
            "dominatesLiTian": self.dominates_li_tian,
            "tightAtLeading": self.tight_at_leading,
        }


@dataclass
class BoundReport:
    name: str
    edge_list: str
    v: int
    e: int
    girth: int
    kg: int
    mode: str
    rows: list[BoundRow] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "graph": self.name,
            "edgeList": self.edge_list,
            "v": self.v,
            "e": self.e,
            "girth": self.girth,
            "kg": str(self.kg),
            "mode": self.mode,
            "rows": [
                {
                    "r": row.r,
                    "exact": str(row.exact),
                    "liTian": str(row.li_tian),
                    "improved": str(row.improved),
                    "improvedAlt": str(row.improved_alt),
                    "edge": {
                        "id": row.choice.edge_id,
                        "endpoints": list(row.choice.endpoints),
                        "lg": str(row.choice.lg),
                        "lgp1star": str(row.choice.lgp1star),
                        "S": str(row.choice.s_value),
                        "mode": row.choice.mode,
                    },
                    "flags": row.flags(),
                }
                for row in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "exact", "li_tian", "improved", "edge", "lg", "lgp1star", "S", "flags"])
        for row in self.rows:
            flags = ";".join(f"{k}={'' if val is None else str(val).lower()}" for k, val in row.flags().items())
            w.writerow([
                row.r, row.exact, row.li_tian, row.improved,
                "{}-{}".format(*row.choice.endpoints), row.choice.lg,
                row.choice.lgp1star, row.choice.s_value, flags,
            ])
        return buf.getvalue()


def bound_report(
    g: Graph,
    mode: str = "per-r",
    edge_id: int | None = None,
    exact: ChromaticPolynomial | None = None,
    census: CycleCensus | None = None,
) -> BoundReport:
    """Exact coefficients next to the Li-Tian and improved bounds for every r."""
    census = census or cycle_census(g)
    if census.girth == math.inf:
        raise AcyclicGraphError("graph has no circuit; girth and the bounds are undefined")
    exact = exact or chromatic_polynomial(g, cache=True)
    gi = int(census.girth)
    report = BoundReport(
        g.name, g.to_edge_list(), g.v, g.e, gi, census.k(gi),
        "edge" if edge_id is not None else mode,
    )
    for r in range(1, g.v + 1):
        if edge_id is not None:
            choice = fixed_choice(g, census, edge_id, r)
        else:
            choice = select_edge(g, census, r, mode)
        p = _params(g, census, choice.edge_id, r)
        report.rows.append(BoundRow(
            r=r,
            exact=exact.a(r),
            li_tian=li_tian_bound(p),
            improved=improved_bound(p),
            improved_alt=improved_bound_alt(p),
            choice=choice,
            triangle=triangle_term(p),
            leading=r >= g.v - gi + 1,
        ))
    return report
