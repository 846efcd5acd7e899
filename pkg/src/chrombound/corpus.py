"""Graph corpora for sweeps: named families plus seeded random G(n, m)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph, GraphFormatError, parse_edge_list, parse_generator, random_gnm

DEFAULT_NAMED = (
    "path:n=2", "path:n=3", "path:n=4", "path:n=5",
    *(f"cycle:n={n}" for n in range(3, 9)),
    *(f"complete:n={n}" for n in range(3, 7)),
    "completeBipartite:a=2,b=3", "completeBipartite:a=3,b=3",
    "petersen",
)


@dataclass(frozen=True)
class RandomSpec:
    n_min: int
    n_max: int
    count: int
    seed: int
    m_min: int | None = None
    m_max: int | None = None

    def expand(self) -> list[Graph]:
        rng = random.Random(self.seed)
        out = []
        for i in range(self.count):
            n = rng.randint(self.n_min, self.n_max)
            top = n * (n - 1) // 2
            lo = max(n - 1, self.m_min if self.m_min is not None else n - 1)
            hi = min(top, self.m_max if self.m_max is not None else top)
            if lo > hi:
                raise ValueError(f"no connected G({n}, m) with {lo} <= m <= {hi}")
            m = rng.randint(lo, hi)
            graph_seed = rng.randrange(2**32)
            g = random_gnm(n, m, graph_seed)
            out.append(_rename(g, f"rand{self.seed}-{i:03d}-n{n}-m{m}-s{graph_seed}"))
        return out


def parse_random(text: str) -> RandomSpec:
    """``n=4-8,m=5-12,count=10,seed=7``; single values stand for one-point ranges."""
    fields: dict[str, tuple[int, int]] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, eq, value = item.partition("=")
        if not eq:
            raise GraphFormatError(f"bad random-corpus field {item!r}")
        lo, _, hi = value.partition("-")
        try:
            fields[key.strip()] = (int(lo), int(hi or lo))
        except ValueError:
            raise GraphFormatError(f"non-integer value in {item!r}") from None
    unknown = set(fields) - {"n", "m", "count", "seed"}
    if unknown or not {"n", "count", "seed"} <= set(fields):
        raise GraphFormatError("random corpus needs n, count and seed (m optional)")
    m = fields.get("m")
    return RandomSpec(
        n_min=fields["n"][0], n_max=fields["n"][1],
        count=fields["count"][0], seed=fields["seed"][0],
        m_min=m[0] if m else None, m_max=m[1] if m else None,
    )


@dataclass
class CorpusSpec:
    named: tuple[str, ...] = DEFAULT_NAMED
    random: RandomSpec | None = field(default_factory=lambda: RandomSpec(4, 8, 100, 42))
    max_v: int = 10
    max_e: int = 28

    @classmethod
    def default(cls) -> "CorpusSpec":
        return cls()

    @classmethod
    def empty(cls) -> "CorpusSpec":
        return cls(named=(), random=None)


def _rename(g: Graph, name: str) -> Graph:
    # round-trip through the parser so emitted edge lists replay with identical labels
    return parse_edge_list(g.to_edge_list(), name=name)


def expand(spec: CorpusSpec) -> tuple[list[Graph], list[str]]:
    """Graphs sorted by name, plus notices for anything skipped by the budgets."""
    graphs: list[Graph] = []
    skipped: list[str] = []
    for gen in spec.named:
        g = parse_generator(gen)
        graphs.append(_rename(g, g.name or gen))
    if spec.random is not None:
        graphs.extend(spec.random.expand())
    kept = []
    for g in graphs:
        if g.v > spec.max_v or g.e > spec.max_e:
            skipped.append(f"{g.name}: v={g.v}, e={g.e} over budget (max v={spec.max_v}, e={spec.max_e})")
        else:
            kept.append(g)
    return sorted(kept, key=lambda g: g.name), skipped
