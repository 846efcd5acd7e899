import math

import networkx as nx
import pytest

from chrombound.cycles import (
    count_cycles,
    count_cycles_star,
    count_cycles_through_edge,
    cycle_census,
    cycle_edge_ids,
    enumerate_cycles,
    girth,
    verify_lemma2,
)
from chrombound.graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    path_graph,
    petersen_graph,
    random_gnm,
)

from conftest import brute_cycle_count, small_graphs


def test_girth_examples():
    assert girth(complete_graph(3)) == 3
    assert girth(petersen_graph()) == 5
    assert girth(path_graph(6)) == math.inf
    assert girth(complete_bipartite_graph(3, 3)) == 4


def test_count_examples():
    k4 = complete_graph(4)
    assert count_cycles(k4, 3) == 4
    assert count_cycles(k4, 4) == 3
    assert count_cycles(cycle_graph(5), 4) == 0
    assert count_cycles(petersen_graph(), 5) == 12


def test_through_edge_examples():
    k4, c4 = complete_graph(4), cycle_graph(4)
    assert all(count_cycles_through_edge(k4, e.id, 3) == 2 for e in k4.edges)
    assert all(count_cycles_through_edge(c4, e.id, 4) == 1 for e in c4.edges)
    assert count_cycles_through_edge(c4, 0, 3) == 0
    with pytest.raises(KeyError):
        count_cycles_through_edge(c4, 9, 4)


def test_star_examples():
    k4 = complete_graph(4)
    assert all(count_cycles_star(k4, e.id, 4) == 0 for e in k4.edges)
    assert count_cycles_star(cycle_graph(4), 0, 4) == 1
    assert count_cycles_star(cycle_graph(5), 3, 5) == 1


def test_star_blocks_only_triangle_apex_edges():
    # triangle 0-1-2 sharing edge 1-2 with the 4-cycle 1-2-3-4
    g = Graph.from_pairs(5, [(0, 1), (0, 2), (2, 3), (3, 4), (1, 2), (1, 4)])
    e12 = g.edge_between(1, 2)
    assert count_cycles_through_edge(g, e12, 4) == 1
    assert count_cycles_star(g, e12, 4) == 1
    # the 5-cycle 0-1-4-3-2 avoids 1-2, so it does not count for that edge at all
    assert count_cycles_star(g, e12, 5) == 0


@pytest.mark.parametrize("g", small_graphs(), ids=repr)
def test_dfs_counts_match_brute_force_and_networkx(g):
    nxg = nx.Graph(g.pairs())
    nxg.add_nodes_from(g.vertices)
    by_len = {}
    for c in nx.simple_cycles(nxg):
        by_len[len(c)] = by_len.get(len(c), 0) + 1
    for n in range(3, g.v + 1):
        k = count_cycles(g, n)
        assert k == brute_cycle_count(g, n)
        assert k == by_len.get(n, 0)


@pytest.mark.parametrize("g", small_graphs(), ids=repr)
def test_census_invariants(g):
    c = cycle_census(g)
    cycles = list(enumerate_cycles(g))
    assert len(set(frozenset(cycle_edge_ids(g, x)) for x in cycles)) == len(cycles)
    for n in range(3, g.v + 1):
        # each circuit of length n has exactly n edges
        assert sum(c.ell(e.id, n) for e in g.edges) == n * c.k(n)
        for e in g.edges:
            assert 0 <= c.ell(e.id, n) <= c.k(n)
            assert c.ell_star(e.id, n) <= c.ell(e.id, n)
            assert c.ell(e.id, n) == count_cycles_through_edge(g, e.id, n)
            assert c.ell_star(e.id, n) == count_cycles_star(g, e.id, n)
    lengths = [n for n, k in c.k_by_length.items() if k]
    if lengths:
        assert c.girth == girth(g) == min(lengths)
        assert all(c.k(n) == 0 for n in range(3, int(c.girth)))
    else:
        assert girth(g) == math.inf


@pytest.mark.parametrize("g", small_graphs(), ids=repr)
def test_deletion_census_is_exact(g):
    c = cycle_census(g)
    for e in g.edges:
        dc = cycle_census(delete_edge(g, e.id))
        assert all(dc.k(n) == c.k(n) - c.ell(e.id, n) for n in range(3, g.v + 1))


@pytest.mark.parametrize("g", small_graphs(), ids=repr)
def test_contraction_sizes(g):
    c = cycle_census(g)
    for e in g.edges:
        h = contract_edge(g, e.id)
        assert (h.v, h.e) == (g.v - 1, g.e - 1 - c.ell(e.id, 3))


def test_lemma2_c4_case_i():
    rep = verify_lemma2(cycle_graph(4), 0)
    assert rep.case == "i"
    row3 = rep.rows[0]
    assert (row3.n, row3.contracted_predicted, row3.contracted_measured) == (3, 1, 1)
    assert rep.deletion_ok and rep.contraction_ok


def test_lemma2_t2():
    rep = verify_lemma2(path_graph(2), 0)
    assert rep.rows == []
    assert rep.deleted_counts_ok and rep.contracted_counts_ok


def test_lemma2_k4_case_ii_mismatch():
    rep = verify_lemma2(complete_graph(4), 0)
    assert rep.case == "ii" and rep.ell3 == 2
    row3 = rep.rows[0]
    assert (row3.contracted_predicted, row3.contracted_measured) == (2, 1)
    assert not rep.contraction_ok
    assert rep.deletion_ok


def test_lemma2_case_i_misses_folded_circuits():
    # In K_3,3 the 6-cycles through both ends of xy but avoiding xy collapse
    # to closed walks after contraction; the literal prediction overcounts.
    g = complete_bipartite_graph(3, 3)
    rep = verify_lemma2(g, 0)
    row6 = next(r for r in rep.rows if r.n == 6)
    assert rep.case == "i"
    assert (row6.contracted_predicted, row6.contracted_measured, row6.chords) == (2, 0, 2)
    assert row6.chord_corrected == row6.contracted_measured


@pytest.mark.parametrize("g", small_graphs() + [petersen_graph()], ids=repr)
def test_case_i_holds_after_chord_correction(g):
    c = cycle_census(g)
    for e in g.edges:
        rep = verify_lemma2(g, e.id, census=c)
        if rep.case != "i":
            continue
        for row in rep.rows:
            assert row.contracted_measured == row.chord_corrected
            # folded circuits need two x-y paths of length >= g-1 each
            if row.n < 2 * c.girth - 2:
                assert row.contracted_match


def test_verify_lemma2_rejects_long_range():
    with pytest.raises(ValueError):
        verify_lemma2(cycle_graph(4), 0, max_length=5)


def test_unsimplified_graph_rejected():
    with pytest.raises(ValueError, match="simplif"):
        count_cycles(Graph.from_pairs(2, [(0, 1), (0, 1)]), 3)


def test_random_graph_census_spot():
    g = random_gnm(8, 14, 5)
    c = cycle_census(g)
    assert sum(c.k_by_length.values()) == len(list(enumerate_cycles(g)))
