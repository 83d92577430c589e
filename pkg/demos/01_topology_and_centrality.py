"""
Router topology and node value
==============================

Build the default 50-router / 150-link random topology, then look at the
two static attributes each router carries into the caching decision:
betweenness and eigenvector centrality.
"""

import numpy as np

from ccnsim.centrality import CentralityTable
from ccnsim.topology import all_pairs_shortest_paths, generate_random_graph, route_next_hop

g = generate_random_graph(50, 150, seed=42)
print(f"{g.node_count} routers, {g.edge_count} links, connected={g.is_connected()}")

degrees = np.array([g.degree(v) for v in range(g.node_count)])
print("degree min/mean/max:", degrees.min(), degrees.mean(), degrees.max())

# Hop distances, shortest-path counts and next hops for every pair.
spt = all_pairs_shortest_paths(g)
print("diameter:", spt.dist.max())

# Forwarding is deterministic: lowest-id next hop among the equal-cost ones.
src, dst = 0, int(spt.dist[0].argmax())
path = [src]
while path[-1] != dst:
    path.append(route_next_hop(spt, path[-1], dst))
print(f"route {src} -> {dst}:", path)

table = CentralityTable.compute(g, spt)
top = np.argsort(-table.betweenness)[:5]
print("\nmost central routers")
print("node  degree  betweenness  eigenvector")
for v in top:
    print(f"{v:4d}  {degrees[v]:6d}  {table.betweenness[v]:11.4f}  {table.eigenvector[v]:11.4f}")

# The static half of the node value; connectivity is added during a run.
print("\nstatic node value range:", table.static_part().min().round(3), "-", table.static_part().max().round(3))
