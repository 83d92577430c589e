"""Undirected router topologies and the shortest-path tables used for routing."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class TopologyError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over nodes ``0 .. n-1``.

    ``edges`` holds normalized ``(u, v)`` pairs with ``u < v``, sorted.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: np.ndarray = field(repr=False, compare=False)
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 1:
            raise TopologyError(f"node count must be positive, got {n}")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise TopologyError(f"self-loop at node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise TopologyError(f"edge ({u}, {v}) outside 0..{n - 1}")
            norm.add((min(u, v), max(u, v)))
        edge_list = tuple(sorted(norm))
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edge_list:
            adj[u, v] = adj[v, u] = True
        adj.setflags(write=False)
        nbrs = tuple(tuple(int(j) for j in np.flatnonzero(adj[i])) for i in range(n))
        g = cls(n, edge_list, adj, nbrs)
        if not g.is_connected():
            raise TopologyError("graph is not connected")
        return g

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, node: int) -> int:
        return len(self.neighbors[node])

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.neighbors[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.node_count


def generate_random_graph(n: int, m: int, seed) -> Graph:
    """Random connected simple graph with exactly ``n`` nodes and ``m`` edges.

    A random spanning tree (each node of a shuffled order attaches to a
    uniformly chosen earlier node) is topped up with non-edges drawn
    uniformly without replacement.
    """
    if n < 1:
        raise TopologyError(f"node count must be positive, got {n}")
    max_edges = n * (n - 1) // 2
    if not (n - 1 <= m <= max_edges):
        raise TopologyError(f"edge count {m} outside feasible range [{n - 1}, {max_edges}] for n={n}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)

    order = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        j = int(rng.integers(i))
        u, v = int(order[i]), int(order[j])
        edges.add((min(u, v), max(u, v)))

    extra = m - (n - 1)
    if extra:
        candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        picks = rng.choice(len(candidates), size=extra, replace=False)
        edges.update(candidates[int(i)] for i in picks)
    return Graph.from_edges(n, edges)


# Small named graphs, handy for tests and demos.

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Node 0 is the hub."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@dataclass(frozen=True)
class ShortestPathTable:
    """All-pairs hop distances, shortest-path counts and next-hop sets.

    ``next_hop[s, t]`` caches the lowest-id member of ``next_hops[s][t]``
    (-1 on the diagonal) so forwarding is a single array lookup.
    """

    dist: np.ndarray
    sigma: np.ndarray
    next_hops: tuple[tuple[tuple[int, ...], ...], ...]
    next_hop: np.ndarray


def all_pairs_shortest_paths(g: Graph) -> ShortestPathTable:
    n = g.node_count
    dist = np.full((n, n), -1, dtype=np.int64)
    # float keeps path counts exact well past anything a 50-node graph produces
    sigma = np.zeros((n, n), dtype=np.float64)
    for s in range(n):
        d, sg = dist[s], sigma[s]
        d[s] = 0
        sg[s] = 1.0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors[u]:
                if d[v] < 0:
                    d[v] = d[u] + 1
                    queue.append(v)
                if d[v] == d[u] + 1:
                    sg[v] += sg[u]
    if (dist < 0).any():
        raise TopologyError("graph is not connected")

    hops = []
    first = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = []
        for t in range(n):
            if s == t:
                row.append(())
                continue
            hs = tuple(h for h in g.neighbors[s] if dist[h, t] == dist[s, t] - 1)
            row.append(hs)
            first[s, t] = hs[0]
        hops.append(tuple(row))
    for arr in (dist, sigma, first):
        arr.setflags(write=False)
    return ShortestPathTable(dist, sigma, tuple(hops), first)


def route_next_hop(table: ShortestPathTable, current: int, destination: int) -> int:
    """Next router from ``current`` toward ``destination``; lowest id wins ties."""
    if current == destination:
        raise TopologyError(f"already at destination {destination}")
    return int(table.next_hop[current, destination])


def dump_edge_list(g: Graph, path) -> None:
    lines = [f"{g.node_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    Path(path).write_text("\n".join(lines) + "\n")


def load_edge_list(path) -> Graph:
    rows = [ln.split() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not rows:
        raise TopologyError(f"{path}: empty edge-list file")
    n, m = (int(x) for x in rows[0])
    edges = [(int(u), int(v)) for u, v in rows[1:]]
    if len(edges) != m:
        raise TopologyError(f"{path}: header declares {m} edges, found {len(edges)}")
    g = Graph.from_edges(n, edges)
    if g.edge_count != m:
        raise TopologyError(f"{path}: duplicate edges in file")
    return g
