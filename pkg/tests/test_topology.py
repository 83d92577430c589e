import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ccnsim.topology import (
    Graph,
    TopologyError,
    all_pairs_shortest_paths,
    complete_graph,
    cycle_graph,
    dump_edge_list,
    generate_random_graph,
    load_edge_list,
    path_graph,
    route_next_hop,
)

from oracles import bfs_reachable, shortest_paths


def test_default_size_graph():
    g = generate_random_graph(50, 150, 42)
    assert g.node_count == 50
    assert g.edge_count == 150
    assert g.is_connected()
    assert len(bfs_reachable(50, g.edges)) == 50


def test_two_nodes_single_edge():
    for seed in range(5):
        assert generate_random_graph(2, 1, seed).edges == ((0, 1),)


def test_spanning_tree_case():
    g = generate_random_graph(5, 4, 7)
    assert g.edge_count == 4
    assert bfs_reachable(5, g.edges) == set(range(5))


@pytest.mark.parametrize("n,m", [(5, 3), (5, 11), (1, 1), (4, -1)])
def test_rejects_infeasible_edge_count(n, m):
    with pytest.raises(TopologyError):
        generate_random_graph(n, m, 0)


def test_same_seed_same_edges():
    assert generate_random_graph(30, 70, 5).edges == generate_random_graph(30, 70, 5).edges
    assert generate_random_graph(30, 70, 5).edges != generate_random_graph(30, 70, 6).edges


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(n - 1, n * (n - 1) // 2))),
       st.integers(0, 2**32 - 1))
def test_adjacency_invariants(nm, seed):
    n, m = nm
    g = generate_random_graph(n, m, seed)
    a = g.adjacency
    assert (a == a.T).all()
    assert not a.diagonal().any()
    assert int(np.triu(a).sum()) == m
    assert g.is_connected()


def test_rejects_disconnected_and_self_loops():
    with pytest.raises(TopologyError):
        Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(TopologyError):
        Graph.from_edges(2, [(0, 0), (0, 1)])


def test_cycle_counts_two_paths():
    spt = all_pairs_shortest_paths(cycle_graph(4))
    assert spt.dist[0, 2] == 2
    assert spt.sigma[0, 2] == 2
    assert len(shortest_paths(4, cycle_graph(4).edges, 0, 2)) == 2


def test_path_and_complete():
    spt = all_pairs_shortest_paths(path_graph(3))
    assert spt.dist[0, 2] == 2 and spt.sigma[0, 2] == 1
    spt = all_pairs_shortest_paths(complete_graph(4))
    off = ~np.eye(4, dtype=bool)
    assert (spt.dist[off] == 1).all() and (spt.sigma[off] == 1).all()


def test_table_invariants_and_sigma_against_enumeration(small_graphs):
    for g in small_graphs:
        spt = all_pairs_shortest_paths(g)
        n = g.node_count
        assert (spt.dist == spt.dist.T).all()
        assert (spt.dist.diagonal() == 0).all() and (spt.sigma.diagonal() == 1).all()
        for s in range(n):
            for t in range(n):
                if s == t:
                    continue
                assert spt.sigma[s, t] == len(shortest_paths(n, g.edges, s, t))
                for h in spt.next_hops[s][t]:
                    assert spt.dist[h, t] == spt.dist[s, t] - 1


def test_route_next_hop():
    p3 = all_pairs_shortest_paths(path_graph(3))
    assert route_next_hop(p3, 0, 2) == 1
    c4 = all_pairs_shortest_paths(cycle_graph(4))
    assert route_next_hop(c4, 0, 2) == min(1, 3)
    k4 = all_pairs_shortest_paths(complete_graph(4))
    assert route_next_hop(k4, 0, 1) == 1
    with pytest.raises(TopologyError):
        route_next_hop(k4, 2, 2)


def test_forwarding_reaches_destination_in_dist_hops(small_graphs):
    for g in small_graphs:
        spt = all_pairs_shortest_paths(g)
        for s in range(g.node_count):
            for t in range(g.node_count):
                cur, hops = s, 0
                while cur != t:
                    cur = route_next_hop(spt, cur, t)
                    hops += 1
                assert hops == spt.dist[s, t]


def test_edge_list_round_trip(tmp_path):
    g = generate_random_graph(12, 20, 3)
    f = tmp_path / "g.txt"
    dump_edge_list(g, f)
    lines = f.read_text().splitlines()
    assert lines[0] == "12 20" and len(lines) == 21
    assert load_edge_list(f).edges == g.edges


def test_edge_list_header_mismatch(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("3 3\n0 1\n1 2\n")
    with pytest.raises(TopologyError):
        load_edge_list(f)
