"""
Comparing cache admission strategies
====================================

One seed at the default parameters for each of the four strategies. The
same topology and request trace are replayed for every strategy.

Pass a shorter duration on the command line for a quick look, e.g.
``python demos/03_compare_strategies.py 20``.
"""

import sys

from ccnsim.config import RunConfig
from ccnsim.engine import build_topology, simulate
from ccnsim.strategy import STRATEGIES

duration = float(sys.argv[1]) if len(sys.argv) > 1 else 100.0
cfg = RunConfig(duration=duration)
topology = build_topology(cfg, seed=0)

print(f"{'strategy':10s} {'hit ratio':>9s} {'avg hops':>9s} {'latency ms':>10s}")
for kind in STRATEGIES:
    r = simulate(cfg.replace(strategy=kind), seed=0, topology=topology)
    print(f"{r.strategy:10s} {r.hit_ratio:9.4f} {r.avg_hop_count:9.4f} {r.avg_latency * 1e3:10.3f}")

# Node-level view of the last run's bookkeeping
d = r.diagnostics
print(f"\n{d['delivered']} deliveries, PIT leaks {d['pit_leaks']}, peak store occupancy {d['peak_occupancy']}")
