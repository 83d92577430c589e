"""
Cache size sweep
================

Hit ratio, hop count and latency versus per-router cache size, averaged
over a few seeds. Writes ``cache_sweep.csv`` next to the working directory
and, if matplotlib is available, ``cache_sweep.png``.
"""

import sys
from collections import defaultdict

import numpy as np

from ccnsim.cli import emit_csv
from ccnsim.config import RunConfig
from ccnsim.engine import sweep
from ccnsim.strategy import STRATEGIES

duration = float(sys.argv[1]) if len(sys.argv) > 1 else 20.0
sizes = [100, 500, 1000, 1500, 2000]
rows = sweep(RunConfig(duration=duration), "cache_size", sizes, STRATEGIES, seeds=[0, 1])
emit_csv([r.report for r in rows], "cache_sweep.csv")

acc = defaultdict(list)
for r in rows:
    acc[r.report.strategy, r.config.cache_size].append(r.report)

for label in ("hit_ratio", "avg_hop_count", "avg_latency"):
    print(f"\n{label}")
    print("strategy  " + "".join(f"{s:>9d}" for s in sizes))
    for kind in sorted({k for k, _ in acc}):
        vals = [np.mean([getattr(rep, label) for rep in acc[kind, s]]) for s in sizes]
        print(f"{kind:9s} " + "".join(f"{v:9.4f}" for v in vals))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, axes = plt.subplots(1, 3, figsize=(12, 3.5))
for ax, label in zip(axes, ("hit_ratio", "avg_hop_count", "avg_latency")):
    for kind in sorted({k for k, _ in acc}):
        ax.plot(sizes, [np.mean([getattr(rep, label) for rep in acc[kind, s]]) for s in sizes], marker="o", label=kind)
    ax.set_xlabel("cache size")
    ax.set_title(label)
axes[0].legend()
fig.tight_layout()
fig.savefig("cache_sweep.png", dpi=120)
