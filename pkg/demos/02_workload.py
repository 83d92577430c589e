"""
Request workload
================

Content popularity follows a Zipf-Mandelbrot law over the catalog and each
consumer issues interests as a Poisson process.
"""

import numpy as np

from ccnsim.topology import generate_random_graph
from ccnsim.workload import WorkloadConfig, ZipfMandelbrot, generate_requests, place_consumers_and_server

rng = np.random.default_rng(0)

zipf = ZipfMandelbrot(10_000, a=0.7)
print("share of requests for the top 1, 100, 1000 items:",
      [round(float(zipf.cdf[k - 1]), 3) for k in (1, 100, 1000)])

# Skew controls how much of the traffic a cache of 1000 items can hope to absorb.
for a in (0.1, 0.4, 0.7, 1.0):
    print(f"a={a}: top-1000 share {ZipfMandelbrot(10_000, a).cdf[999]:.3f}")

g = generate_random_graph(50, 150, seed=1)
consumers, server = place_consumers_and_server(g, 18, rng)
print("\nserver router:", server)
print("consumer routers (lowest degree):", consumers)

cfg = WorkloadConfig(duration=10.0)
trace = generate_requests(cfg, consumers, rng)
print(f"\n{len(trace)} interests in {cfg.duration:g}s "
      f"(expected {cfg.lambda_per_consumer * cfg.consumer_count * cfg.duration:.0f})")
print("first five:", list(zip(trace.times[:5].round(5).tolist(), trace.consumers[:5].tolist(), trace.contents[:5].tolist())))
