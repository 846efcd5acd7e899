"""Girth and circuit counts, globally and per edge.

Circuits are enumerated once each by depth-first extension from their lowest
vertex, keeping only the orientation whose second vertex is smaller than the
last one.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .graph import Graph, contract_edge, delete_edge


def _require_simple(g: Graph) -> None:
    if not g.is_simple:
        raise ValueError("cycle counts are defined on simplified graphs; call simplify() first")


def enumerate_cycles(g: Graph, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield each simple circuit once, as a canonical vertex sequence."""
    _require_simple(g)
    limit = g.v if max_length is None else min(max_length, g.v)
    adj = {w: sorted(ns) for w, ns in g.adjacency.items()}
    for root in sorted(g.vertices):
        path = [root]
        on_path = {root}

        def extend(w: int) -> Iterator[tuple[int, ...]]:
            for x in adj[w]:
                if x == root:
                    if len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                elif x > root and x not in on_path and len(path) < limit:
                    path.append(x)
                    on_path.add(x)
                    yield from extend(x)
                    path.pop()
                    on_path.discard(x)

        yield from extend(root)


def cycle_edge_ids(g: Graph, cycle: tuple[int, ...]) -> frozenset[int]:
    ids = g.edge_ids_by_pair
    n = len(cycle)
    return frozenset(
        ids[(min(cycle[i], cycle[(i + 1) % n]), max(cycle[i], cycle[(i + 1) % n]))]
        for i in range(n)
    )


def girth(g: Graph) -> float:
    """Length of a shortest circuit, ``math.inf`` for forests."""
    _require_simple(g)
    best = math.inf
    adj = g.adjacency
    # BFS from every vertex; a non-tree edge closes a circuit of length <= d(a)+d(b)+1,
    # and the minimum over all roots is exact.
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: None}
        queue = [s]
        for w in queue:
            for x in adj[w]:
                if x not in dist:
                    dist[x] = dist[w] + 1
                    parent[x] = w
                    queue.append(x)
                elif parent[w] != x:
                    best = min(best, dist[w] + dist[x] + 1)
    return best


def count_cycles(g: Graph, n: int) -> int:
    if n < 3:
        return 0
    return sum(1 for c in enumerate_cycles(g, n) if len(c) == n)


def count_cycles_through_edge(g: Graph, edge_id: int, n: int) -> int:
    g.edge(edge_id)
    if n < 3:
        return 0
    return sum(
        1 for c in enumerate_cycles(g, n) if len(c) == n and edge_id in cycle_edge_ids(g, c)
    )


def _star_blocked(g: Graph, edge_id: int) -> frozenset[int]:
    """Edge ids xz and yz for every common neighbour z of the ends of ``edge_id``."""
    x, y, _ = g.edge(edge_id)
    common = g.adjacency[x] & g.adjacency[y]
    return frozenset(g.edge_between(w, z) for z in common for w in (x, y))


def count_cycles_star(g: Graph, edge_id: int, n: int) -> int:
    """Length-n circuits through ``edge_id`` that use no edge into a triangle apex on it."""
    blocked = _star_blocked(g, edge_id)
    total = 0
    for c in enumerate_cycles(g, n):
        if len(c) != n:
            continue
        ids = cycle_edge_ids(g, c)
        if edge_id in ids and not ids & blocked:
            total += 1
    return total


@dataclass
class CycleCensus:
    """Circuit counts by length, and by (edge id, length).

    ``per_edge_star[(i, n)]`` is the starred count of length-n circuits for
    edge ``i``; callers wanting the quantity attached to length g+1 index it
    with n = g+1.
    """

    girth: float
    k_by_length: dict[int, int]
    per_edge: dict[tuple[int, int], int] = field(default_factory=dict)
    per_edge_star: dict[tuple[int, int], int] = field(default_factory=dict)
    per_edge_chord: dict[tuple[int, int], int] = field(default_factory=dict)
    max_length: int = 0

    def k(self, n: int) -> int:
        return self.k_by_length.get(n, 0)

    def ell(self, edge_id: int, n: int) -> int:
        return self.per_edge.get((edge_id, n), 0)

    def ell_star(self, edge_id: int, n: int) -> int:
        return self.per_edge_star.get((edge_id, n), 0)

    def chords(self, edge_id: int, n: int) -> int:
        """Length-n circuits passing through both ends of the edge without using it."""
        return self.per_edge_chord.get((edge_id, n), 0)


def cycle_census(g: Graph, max_length: int | None = None) -> CycleCensus:
    _require_simple(g)
    limit = g.v if max_length is None else min(max_length, g.v)
    blocked = {e.id: _star_blocked(g, e.id) for e in g.edges}
    k: Counter[int] = Counter()
    per_edge: Counter[tuple[int, int]] = Counter()
    star: Counter[tuple[int, int]] = Counter()
    chord: Counter[tuple[int, int]] = Counter()
    pair_ids = g.edge_ids_by_pair
    for c in enumerate_cycles(g, limit):
        n = len(c)
        k[n] += 1
        ids = cycle_edge_ids(g, c)
        for i in ids:
            per_edge[(i, n)] += 1
            if not ids & blocked[i]:
                star[(i, n)] += 1
        for a, b in combinations(sorted(c), 2):
            i = pair_ids.get((a, b))
            if i is not None and i not in ids:
                chord[(i, n)] += 1
    found = [n for n, cnt in k.items() if cnt]
    return CycleCensus(
        girth=min(found) if found else girth(g),
        k_by_length=dict(sorted(k.items())),
        per_edge=dict(per_edge),
        per_edge_star=dict(star),
        per_edge_chord=dict(chord),
        max_length=limit,
    )


# ----------------------------------------------------------------------------
# circuit counts under deletion and contraction
# ----------------------------------------------------------------------------

@dataclass
class Lemma2Row:
    n: int
    k: int
    ell: int
    ell_next: int
    ell_star_next: int
    deleted_measured: int
    deleted_predicted: int
    contracted_measured: int
    contracted_predicted: int
    case: str  # "i" when no triangle contains the edge, else "ii"
    chords: int = 0

    @property
    def chord_corrected(self) -> int:
        """Case (i) prediction after removing circuits that fold onto themselves."""
        return self.k - self.ell - self.chords + self.ell_next

    @property
    def deleted_match(self) -> bool:
        return self.deleted_measured == self.deleted_predicted

    @property
    def contracted_match(self) -> bool:
        return self.contracted_measured == self.contracted_predicted


@dataclass
class Lemma2Report:
    edge_id: int
    case: str
    ell3: int
    deleted_counts_ok: bool
    contracted_counts_ok: bool
    rows: list[Lemma2Row]

    @property
    def deletion_ok(self) -> bool:
        return self.deleted_counts_ok and all(r.deleted_match for r in self.rows)

    @property
    def contraction_ok(self) -> bool:
        return self.contracted_counts_ok and all(r.contracted_match for r in self.rows)

    def mismatches(self) -> list[Lemma2Row]:
        return [r for r in self.rows if not r.contracted_match]


def verify_lemma2(
    g: Graph,
    edge_id: int,
    max_length: int | None = None,
    census: CycleCensus | None = None,
) -> Lemma2Report:
    """Compare measured circuit counts on G-xy and G/xy against the predicted ones."""
    g.edge(edge_id)
    limit = g.v if max_length is None else max_length
    if limit > g.v:
        raise ValueError(f"max_length {limit} exceeds v={g.v}")
    if census is None or census.max_length < g.v:
        census = cycle_census(g)
    deleted = delete_edge(g, edge_id)
    contracted = contract_edge(g, edge_id)
    dc = cycle_census(deleted)
    cc = cycle_census(contracted)
    ell3 = census.ell(edge_id, 3)
    case = "i" if ell3 == 0 else "ii"
    rows = []
    for n in range(3, limit + 1):
        k, ell = census.k(n), census.ell(edge_id, n)
        ell_next, star_next = census.ell(edge_id, n + 1), census.ell_star(edge_id, n + 1)
        rows.append(Lemma2Row(
            n=n, k=k, ell=ell, ell_next=ell_next, ell_star_next=star_next,
            deleted_measured=dc.k(n),
            deleted_predicted=k - ell,
            contracted_measured=cc.k(n),
            contracted_predicted=k - ell + (ell_next if case == "i" else star_next),
            case=case,
            chords=census.chords(edge_id, n),
        ))
    return Lemma2Report(
        edge_id=edge_id,
        case=case,
        ell3=ell3,
        deleted_counts_ok=(deleted.v, deleted.e) == (g.v, g.e - 1),
        contracted_counts_ok=(contracted.v, contracted.e) == (g.v - 1, g.e - 1 - ell3),
        rows=rows,
    )
