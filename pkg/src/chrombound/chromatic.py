"""Exact chromatic polynomials.

The main route is deletion-contraction over adjacency bitmasks. Two
independent routes serve as oracles: exhaustive proper-coloring counts, and
Whitney's broken-circuit subgraph count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from .cycles import cycle_edge_ids, enumerate_cycles
from .graph import Graph, contract_edge, delete_edge

DEFAULT_WORK_CAP = 10**9
DEFAULT_MAX_EDGES = 20
CANON_PERMUTATION_CAP = 24


class BudgetExceeded(RuntimeError):
    """An exhaustive oracle was asked for more work than its budget allows."""


@dataclass(frozen=True)
class ChromaticPolynomial:
    """P(G, q) = sum_r (-1)^(v-r) a_r q^r, stored as the magnitudes a_1..a_v."""

    vertex_count: int
    magnitudes: tuple[int, ...]

    def __post_init__(self):
        if len(self.magnitudes) != self.vertex_count:
            raise ValueError("need exactly one magnitude per power q^1..q^v")

    @classmethod
    def from_signed(cls, coeffs: Sequence[int]) -> "ChromaticPolynomial":
        """From signed coefficients indexed by power (constant term first)."""
        v = len(coeffs) - 1
        if coeffs[0] != 0:
            raise ValueError("chromatic polynomials have no constant term")
        mags = []
        for r in range(1, v + 1):
            c = coeffs[r] * (-1) ** (v - r)
            if c < 0:
                raise ValueError(f"coefficient of q^{r} has the wrong sign")
            mags.append(c)
        return cls(v, tuple(mags))

    def a(self, r: int) -> int:
        return self.magnitudes[r - 1]

    def signed(self) -> list[int]:
        v = self.vertex_count
        return [0] + [(-1) ** (v - r) * self.a(r) for r in range(1, v + 1)]

    def __call__(self, q: int) -> int:
        return evaluate(self, q)

    def render(self) -> str:
        terms = []
        for r in range(self.vertex_count, 0, -1):
            a = self.a(r)
            if a == 0:
                continue
            sign = "-" if (self.vertex_count - r) % 2 else "+"
            mono = "q" if r == 1 else f"q^{r}"
            body = mono if a == 1 else f"{a}{mono}"
            terms.append((sign, body))
        out = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> str:
        return json.dumps([str(a) for a in self.magnitudes])


def evaluate(p: ChromaticPolynomial, q: int) -> int:
    v = p.vertex_count
    return sum((-1) ** (v - r) * p.a(r) * q**r for r in range(1, v + 1))


# ----------------------------------------------------------------------------
# signed coefficient-list arithmetic
# ----------------------------------------------------------------------------

def _sub(a: list[int], b: list[int]) -> list[int]:
    out = a + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _power(base: list[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = _mul(out, base)
    return out


def _falling(n: int) -> list[int]:
    out = [1]
    for i in range(n):
        out = _mul(out, [-i, 1])
    return out


# ----------------------------------------------------------------------------
# deletion-contraction over bitmasks
# ----------------------------------------------------------------------------

def _to_masks(g: Graph) -> tuple[int, ...]:
    index = {w: i for i, w in enumerate(sorted(g.vertices))}
    adj = [0] * g.v
    for a, b, _ in g.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    return tuple(adj)


def _components(adj: Sequence[int]) -> int:
    n = len(adj)
    seen = 0
    count = 0
    for s in range(n):
        if seen >> s & 1:
            continue
        count += 1
        frontier = 1 << s
        seen |= frontier
        while frontier:
            w = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[w] & ~seen
            seen |= new
            frontier |= new
    return count


def _pivot(adj: Sequence[int]) -> tuple[int, int]:
    """An edge on a shortest circuit, preferring one in the most triangles."""
    n = len(adj)
    best_tri, best = -1, None
    for a in range(n):
        nb = adj[a] >> (a + 1)
        while nb:
            low = nb & -nb
            b = a + 1 + low.bit_length() - 1
            nb ^= low
            tri = bin(adj[a] & adj[b]).count("1")
            if tri > best_tri:
                best_tri, best = tri, (a, b)
    if best_tri > 0:
        return best
    # no triangles: BFS for a shortest circuit and take its closing edge
    best_len, best = n + 1, None
    for s in range(n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for w in queue:
            m = adj[w]
            while m:
                low = m & -m
                x = low.bit_length() - 1
                m ^= low
                if x not in dist:
                    dist[x] = dist[w] + 1
                    parent[x] = w
                    queue.append(x)
                elif parent[w] != x and dist[w] + dist[x] + 1 < best_len:
                    best_len = dist[w] + dist[x] + 1
                    best = (w, x)
    return best


def _delete(adj: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    out = list(adj)
    out[a] &= ~(1 << b)
    out[b] &= ~(1 << a)
    return tuple(out)


def _contract(adj: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    """Merge b into a and drop index b; parallel edges vanish in the bitmask."""
    merged = list(adj)
    merged[a] = (adj[a] | adj[b]) & ~(1 << a) & ~(1 << b)
    for w in range(len(adj)):
        if adj[b] >> w & 1 and w != a:
            merged[w] |= 1 << a
    low_mask = (1 << b) - 1
    out = []
    for w, m in enumerate(merged):
        if w == b:
            continue
        m &= ~(1 << b)
        out.append((m & low_mask) | ((m >> (b + 1)) << b))
    return tuple(out)


def canonical_form(adj: Sequence[int]) -> tuple[int, ...] | None:
    """Smallest relabelled adjacency within degree-refined cells, or None if too costly."""
    n = len(adj)
    deg = [bin(m).count("1") for m in adj]
    sig = [(deg[w], tuple(sorted(deg[x] for x in range(n) if adj[w] >> x & 1))) for w in range(n)]
    cells: dict[tuple, list[int]] = {}
    for w in sorted(range(n), key=lambda w: sig[w]):
        cells.setdefault(sig[w], []).append(w)
    groups = [cells[k] for k in sorted(cells)]
    total = 1
    for grp in groups:
        for i in range(2, len(grp) + 1):
            total *= i
        if total > CANON_PERMUTATION_CAP:
            return None
    best = None
    for choice in product(*(permutations(grp) for grp in groups)):
        order = [w for grp in choice for w in grp]
        pos = {w: i for i, w in enumerate(order)}
        form = []
        for w in order:
            m = 0
            x = adj[w]
            while x:
                low = x & -x
                m |= 1 << pos[low.bit_length() - 1]
                x ^= low
            form.append(m)
        form = tuple(form)
        if best is None or form < best:
            best = form
    return best


class _Engine:
    def __init__(self, cache: bool):
        self.cache: dict[tuple[int, ...], list[int]] | None = {} if cache else None

    def run(self, adj: tuple[int, ...]) -> list[int]:
        n = len(adj)
        m = sum(bin(x).count("1") for x in adj) // 2
        if m == 0:
            return [0] * n + [1]
        if m == n * (n - 1) // 2:
            return _falling(n)
        c = _components(adj)
        if m == n - c:
            return _mul(_power([0, 1], c), _power([-1, 1], n - c))
        key = None
        if self.cache is not None:
            key = canonical_form(adj) or (-1,) + adj
            if key in self.cache:
                return self.cache[key]
        a, b = _pivot(adj)
        out = _sub(self.run(_delete(adj, a, b)), self.run(_contract(adj, a, b)))
        if key is not None:
            self.cache[key] = out
        return out


def chromatic_polynomial(g: Graph, cache: bool = False) -> ChromaticPolynomial:
    """P(G, q) via P(G) = P(G - xy) - P(G / xy).

    Base cases: edgeless graphs, forests and complete graphs have closed forms.
    ``cache`` memoizes subproblems, keyed by a canonical relabelling when one
    is cheap to find and by the labelled adjacency otherwise; the result is
    identical either way.
    """
    coeffs = _Engine(cache).run(_to_masks(g))
    return ChromaticPolynomial.from_signed(coeffs)


# ----------------------------------------------------------------------------
# oracles
# ----------------------------------------------------------------------------

def brute_force_colorings(
    g: Graph,
    q: int,
    work_cap: int = DEFAULT_WORK_CAP,
    use_symmetry: bool = True,
) -> int:
    """Count proper q-colorings by exhaustive assignment.

    Vertices are colored in BFS order and a branch dies as soon as a vertex
    clashes with an already-colored neighbour. With ``use_symmetry`` all
    still-unused colors are treated as one branch weighted by their number,
    which visits one assignment per color-relabelling class.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    if g.v * q**g.v > work_cap:
        raise BudgetExceeded(f"v*q^v = {g.v * q**g.v} exceeds the work cap {work_cap}")
    order: list[int] = []
    seen: set[int] = set()
    for s in sorted(g.vertices):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for w in queue:
            order.append(w)
            for x in sorted(g.adjacency[w]):
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
    pos = {w: i for i, w in enumerate(order)}
    earlier = [[pos[x] for x in g.adjacency[w] if pos[x] < i] for i, w in enumerate(order)]
    colors = [0] * len(order)

    def count(i: int, used: int) -> int:
        if i == len(order):
            return 1
        banned = {colors[j] for j in earlier[i]}
        total = 0
        for c in range(used):
            if c not in banned:
                colors[i] = c
                total += count(i + 1, used)
        if used < q:
            colors[i] = used
            total += (q - used) * count(i + 1, used + 1)
        return total

    def count_plain(i: int) -> int:
        if i == len(order):
            return 1
        banned = {colors[j] for j in earlier[i]}
        total = 0
        for c in range(q):
            if c not in banned:
                colors[i] = c
                total += count_plain(i + 1)
        return total

    return count(0, 0) if use_symmetry else count_plain(0)


def coefficients_via_broken_circuits(
    g: Graph,
    edge_order: Sequence[int] | None = None,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> ChromaticPolynomial:
    """a_r = number of (v-r)-edge subsets containing no broken circuit.

    A broken circuit is a circuit's edge set minus its largest edge under
    ``edge_order`` (ascending edge id by default).
    """
    if g.e > max_edges:
        raise BudgetExceeded(f"e = {g.e} exceeds the broken-circuit budget {max_edges}")
    ids = sorted(e.id for e in g.edges)
    order = list(ids if edge_order is None else edge_order)
    if sorted(order) != ids:
        raise ValueError("edge_order must be a permutation of the edge ids")
    rank = {i: k for k, i in enumerate(order)}
    # broken circuits as rank bitmasks, grouped by their own largest rank
    by_top: dict[int, list[int]] = {}
    for c in enumerate_cycles(g):
        ranks = sorted(rank[i] for i in cycle_edge_ids(g, c))
        mask = sum(1 << k for k in ranks[:-1])
        by_top.setdefault(ranks[-2], []).append(mask)
    counts = [0] * (g.v + 1)

    def grow(mask: int, size: int, start: int) -> None:
        counts[size] += 1
        if size == g.v - 1:
            return
        for k in range(start, g.e):
            new = mask | 1 << k
            if any(bc & new == bc for bc in by_top.get(k, ())):
                continue
            grow(new, size + 1, k + 1)

    grow(0, 0, 0)
    # a_r counts subsets of size v - r
    return ChromaticPolynomial(g.v, tuple(counts[g.v - r] for r in range(1, g.v + 1)))


# ----------------------------------------------------------------------------
# checks on single graphs
# ----------------------------------------------------------------------------

@dataclass
class AdditivityReport:
    edge_id: int
    exact: ChromaticPolynomial
    deleted: ChromaticPolynomial
    contracted: ChromaticPolynomial
    rows: list[tuple[int, bool]]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.rows)


def verify_additivity(g: Graph, edge_id: int, exact: ChromaticPolynomial | None = None) -> AdditivityReport:
    """Check a_r = a'_r + a''_r for r < v and a_v = a'_v."""
    p = exact or chromatic_polynomial(g)
    pd = chromatic_polynomial(delete_edge(g, edge_id))
    pc = chromatic_polynomial(contract_edge(g, edge_id))
    v = g.v
    rows = [(r, p.a(r) == pd.a(r) + pc.a(r)) for r in range(1, v)]
    rows.append((v, p.a(v) == pd.a(v)))
    return AdditivityReport(edge_id, p, pd, pc, rows)


@dataclass
class Prop1Report:
    chain_holds: bool
    value_at_one: int
    peak_positions: list[int]
    edges: int

    @property
    def consistent(self) -> bool:
        """Chain fails for e >= 2 and P(G,1) = 0 for e >= 1."""
        if self.edges >= 1 and self.value_at_one != 0:
            return False
        return not self.chain_holds if self.edges >= 2 else True


def check_proposition1(p: ChromaticPolynomial, e: int) -> Prop1Report:
    v = p.vertex_count
    chain = all(p.a(r) <= p.a(r - 1) for r in range(v, 1, -1))
    top = max(p.magnitudes)
    peaks = [r for r in range(1, v + 1) if p.a(r) == top]
    return Prop1Report(chain, evaluate(p, 1), peaks, e)
