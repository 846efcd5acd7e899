import itertools

import pytest

from chrombound.graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_gnm,
)

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def small_graphs() -> list[Graph]:
    """Mixed bag used by many property tests: every family plus random draws."""
    graphs = [path_graph(2), path_graph(4), complete_graph(3), complete_graph(4),
              complete_graph(5), cycle_graph(4), cycle_graph(5), cycle_graph(6),
              complete_bipartite_graph(2, 3), complete_bipartite_graph(3, 3)]
    graphs += [random_gnm(n, m, seed) for seed, (n, m) in enumerate(
        [(5, 6), (5, 7), (6, 8), (6, 9), (6, 11), (7, 9), (7, 12), (7, 14), (8, 10), (8, 13)])]
    return graphs


def brute_cycle_count(g: Graph, n: int) -> int:
    """Circuits of length n by trying every vertex subset and every cyclic order."""
    adj = g.adjacency
    total = 0
    for subset in itertools.combinations(sorted(g.vertices), n):
        first, rest = subset[0], subset[1:]
        for perm in itertools.permutations(rest):
            cyc = (first,) + perm
            if all(cyc[(i + 1) % n] in adj[cyc[i]] for i in range(n)):
                total += 1
    return total // 2  # each circuit appears once per direction


def naive_colorings(g: Graph, q: int) -> int:
    verts = sorted(g.vertices)
    pairs = g.pairs()
    count = 0
    for colors in itertools.product(range(q), repeat=len(verts)):
        c = dict(zip(verts, colors))
        if all(c[a] != c[b] for a, b in pairs):
            count += 1
    return count
