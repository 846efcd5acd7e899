"""Loopless multigraphs with stable edge ids.

Graphs are immutable. Deletion keeps every surviving edge id, contraction
returns the simplified result, so the edge ids of a graph and of its minors
can be compared directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple

MAX_CONNECT_ATTEMPTS = 10_000

FAMILIES = ("complete", "cycle", "path", "completeBipartite", "petersen", "randomGnm")


class GraphFormatError(ValueError):
    """Raised for unparseable edge lists or generator strings."""


class Edge(NamedTuple):
    u: int
    v: int
    id: int

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("graph needs at least one vertex")
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        seen = set()
        for e in self.edges:
            if e.u == e.v:
                raise ValueError(f"loop at vertex {e.u} (edge id {e.id})")
            if e.u not in vset or e.v not in vset:
                raise ValueError(f"edge {e.id} has an endpoint outside the vertex set")
            if e.id in seen:
                raise ValueError(f"duplicate edge id {e.id}")
            seen.add(e.id)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]], name: str = "") -> "Graph":
        """Graph on vertices 0..n-1 with edge ids assigned in input order."""
        edges = tuple(Edge(min(a, b), max(a, b), i) for i, (a, b) in enumerate(pairs))
        return cls(tuple(range(n)), edges, name)

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {w: set() for w in self.vertices}
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {w: frozenset(s) for w, s in adj.items()}

    @cached_property
    def edge_ids_by_pair(self) -> dict[tuple[int, int], int]:
        """Smallest edge id for each adjacent pair (u < v)."""
        out: dict[tuple[int, int], int] = {}
        for a, b, i in sorted(self.edges, key=lambda e: e.id):
            out.setdefault((a, b), i)
        return out

    @property
    def is_simple(self) -> bool:
        return len(self.edge_ids_by_pair) == len(self.edges)

    @cached_property
    def components(self) -> int:
        seen: set[int] = set()
        count = 0
        for s in self.vertices:
            if s in seen:
                continue
            count += 1
            stack = [s]
            seen.add(s)
            while stack:
                w = stack.pop()
                for x in self.adjacency[w]:
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
        return count

    @property
    def is_connected(self) -> bool:
        return self.components == 1

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise KeyError(f"unknown edge id {edge_id}") from None

    def edge_between(self, a: int, b: int) -> int:
        key = (min(a, b), max(a, b))
        if key not in self.edge_ids_by_pair:
            raise KeyError(f"no edge between {a} and {b}")
        return self.edge_ids_by_pair[key]

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges]

    def to_edge_list(self) -> str:
        """Edge-list text that parses back to an isomorphic graph."""
        lines = [f"{e.u} {e.v}" for e in sorted(self.edges, key=lambda e: e.id)]
        isolated = [w for w in self.vertices if not self.adjacency[w]]
        if isolated:
            lines.insert(0, "# isolated vertices: " + " ".join(map(str, isolated)))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"<Graph {label}v={self.v} e={self.e}>"


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse whitespace-separated vertex pairs, one edge per line.

    ``#`` starts a comment and blank lines are skipped. Labels are renumbered
    0..v-1 in order of first appearance; repeated pairs collapse to one edge.
    """
    relabel: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex labels, got {raw.strip()!r}")
        try:
            a, b = (int(p) for p in parts)
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer label in {raw.strip()!r}") from None
        if a < 0 or b < 0:
            raise GraphFormatError(f"line {lineno}: negative label in {raw.strip()!r}")
        if a == b:
            raise GraphFormatError(f"line {lineno}: loop edge {a}-{b}")
        for w in (a, b):
            relabel.setdefault(w, len(relabel))
        key = (min(relabel[a], relabel[b]), max(relabel[a], relabel[b]))
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    if not relabel:
        raise GraphFormatError("edge list has no vertices")
    return Graph.from_pairs(len(relabel), pairs, name)


def delete_edge(g: Graph, edge_id: int) -> Graph:
    g.edge(edge_id)
    return Graph(g.vertices, tuple(e for e in g.edges if e.id != edge_id), g.name)


def simplify(g: Graph) -> Graph:
    """Collapse each family of parallel edges onto its smallest id."""
    if g.is_simple:
        return g
    keep = set(g.edge_ids_by_pair.values())
    return Graph(g.vertices, tuple(e for e in g.edges if e.id in keep), g.name)


def contract_edge(g: Graph, edge_id: int) -> Graph:
    """Identify the endpoints of ``edge_id`` into its smaller endpoint, then simplify."""
    x, y, _ = g.edge(edge_id)
    merged = []
    for e in g.edges:
        if e.id == edge_id:
            continue
        a = x if e.u == y else e.u
        b = x if e.v == y else e.v
        if a == b:
            continue
        merged.append(Edge(min(a, b), max(a, b), e.id))
    vertices = tuple(w for w in g.vertices if w != y)
    return simplify(Graph(vertices, tuple(merged), g.name))


# ----------------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_pairs(n, combinations(range(n), 2), f"K_{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    return Graph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)], f"C_{n}")


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path graph needs n >= 1")
    return Graph.from_pairs(n, [(i, i + 1) for i in range(n - 1)], f"P_{n}")


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides >= 1")
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_pairs(a + b, pairs, f"K_{a},{b}")


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_pairs(10, outer + spokes + inner, "Petersen")


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform connected G(n, m) by rejection; deterministic in ``seed``."""
    slots = list(combinations(range(n), 2))
    if n < 1 or m > len(slots):
        raise ValueError(f"cannot place {m} edges on {n} vertices")
    if m < n - 1:
        raise ValueError(f"{m} edges cannot connect {n} vertices")
    rng = random.Random(seed)
    for _ in range(MAX_CONNECT_ATTEMPTS):
        pairs = sorted(rng.sample(slots, m))
        g = Graph.from_pairs(n, pairs, f"gnm-n{n}-m{m}-s{seed}")
        if g.is_connected:
            return g
    raise RuntimeError(f"no connected G({n},{m}) after {MAX_CONNECT_ATTEMPTS} draws")


def generate(family: str, params: dict[str, int] | None = None, seed: int | None = None) -> Graph:
    params = dict(params or {})

    def take(*keys: str) -> list[int]:
        missing = [k for k in keys if k not in params]
        extra = set(params) - set(keys)
        if missing or extra:
            raise GraphFormatError(f"{family} expects parameters {list(keys)}, got {sorted(params)}")
        return [params[k] for k in keys]

    if family == "complete":
        return complete_graph(*take("n"))
    if family == "cycle":
        return cycle_graph(*take("n"))
    if family == "path":
        return path_graph(*take("n"))
    if family == "completeBipartite":
        return complete_bipartite_graph(*take("a", "b"))
    if family == "petersen":
        take()
        return petersen_graph()
    if family == "randomGnm":
        if "seed" in params:
            seed = params.pop("seed")
        if seed is None:
            raise GraphFormatError("randomGnm requires a seed")
        n, m = take("n", "m")
        return random_gnm(n, m, seed)
    raise GraphFormatError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def parse_generator(spec: str, seed: int | None = None) -> Graph:
    """Build a graph from a ``family:key=value,...`` string."""
    family, _, rest = spec.partition(":")
    params: dict[str, int] = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, value = item.partition("=")
        if not eq:
            raise GraphFormatError(f"bad generator parameter {item!r}")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise GraphFormatError(f"non-integer value in {item!r}") from None
    return generate(family.strip(), params, seed)
