"""Consumer request process: Zipf-Mandelbrot content choice, Poisson arrivals."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .topology import Graph


@dataclass(frozen=True)
class WorkloadConfig:
    catalog_size: int = 10_000
    zipf_a: float = 0.7
    zipf_q: float = 0.0
    lambda_per_consumer: float = 100.0
    consumer_count: int = 18
    duration: float = 100.0

    def __post_init__(self):
        if self.catalog_size < 1:
            raise ValueError(f"catalog_size must be >= 1, got {self.catalog_size}")
        if self.zipf_a < 0:
            raise ValueError(f"zipf_a must be >= 0, got {self.zipf_a}")
        if self.zipf_q < 0:
            raise ValueError(f"zipf_q must be >= 0, got {self.zipf_q}")
        if self.lambda_per_consumer <= 0:
            raise ValueError(f"lambda must be positive, got {self.lambda_per_consumer}")
        if self.duration <= 0:
            raise ValueError(f"duration must be positive, got {self.duration}")
        if self.consumer_count < 1:
            raise ValueError(f"consumer_count must be >= 1, got {self.consumer_count}")


class ZipfMandelbrot:
    """Ranks ``1..N`` with ``p(r)`` proportional to ``(r + q) ** -a``.

    Sampling inverts a precomputed CDF by binary search.
    """

    def __init__(self, n: int, a: float, q: float = 0.0):
        if n < 1:
            raise ValueError("catalog must hold at least one item")
        w = (np.arange(1, n + 1) + q) ** -float(a)
        self.pmf = w / w.sum()
        self.cdf = np.cumsum(self.pmf)
        self.cdf[-1] = 1.0
        self.n = n

    def sample(self, rng: np.random.Generator, size=None):
        u = rng.random(size)
        ranks = np.searchsorted(self.cdf, u, side="right") + 1
        return int(ranks) if size is None else ranks


def zipf_mandelbrot_sample(rng: np.random.Generator, cfg: WorkloadConfig) -> int:
    return ZipfMandelbrot(cfg.catalog_size, cfg.zipf_a, cfg.zipf_q).sample(rng)


def poisson_arrivals(rng: np.random.Generator, lam: float, duration: float) -> np.ndarray:
    """Arrival times in ``[0, duration)`` with exponential gaps of mean ``1/lam``."""
    if lam <= 0:
        raise ValueError(f"rate must be positive, got {lam}")
    if duration <= 0:
        return np.empty(0)
    chunks = []
    t = 0.0
    block = max(16, int(lam * duration * 1.1) + 16)
    while True:
        times = t + np.cumsum(rng.exponential(1.0 / lam, size=block))
        if times[-1] >= duration:
            chunks.append(times[times < duration])
            break
        chunks.append(times)
        t = times[-1]
    return np.concatenate(chunks)


def place_consumers_and_server(g: Graph, consumer_count: int, rng: np.random.Generator):
    """Server on a uniformly random router; consumers on the lowest-degree others.

    Degree ties go to the lower node id. Returns ``(consumer_nodes, server_node)``.
    """
    n = g.node_count
    if consumer_count > n - 1:
        raise ValueError(f"{consumer_count} consumers do not fit on {n - 1} non-server nodes")
    if consumer_count < 1:
        raise ValueError("need at least one consumer")
    server = int(rng.integers(n))
    others = sorted((v for v in range(n) if v != server), key=lambda v: (g.degree(v), v))
    return others[:consumer_count], server


@dataclass(frozen=True)
class RequestTrace:
    """Merged, time-ordered request stream of all consumers."""

    times: np.ndarray
    consumers: np.ndarray
    contents: np.ndarray

    def __len__(self):
        return len(self.times)


def generate_requests(cfg: WorkloadConfig, consumers, rng: np.random.Generator) -> RequestTrace:
    zipf = ZipfMandelbrot(cfg.catalog_size, cfg.zipf_a, cfg.zipf_q)
    times, who = [], []
    for c in consumers:
        t = poisson_arrivals(rng, cfg.lambda_per_consumer, cfg.duration)
        times.append(t)
        who.append(np.full(len(t), c, dtype=np.int64))
    times = np.concatenate(times) if times else np.empty(0)
    who = np.concatenate(who) if who else np.empty(0, dtype=np.int64)
    order = np.lexsort((who, times))
    contents = zipf.sample(rng, len(order))
    return RequestTrace(times[order], who[order], contents)


def write_trace(trace: RequestTrace, path) -> None:
    path = Path(path)
    try:
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["time_s", "consumer_node", "content_rank"])
            for t, c, k in zip(trace.times, trace.consumers, trace.contents):
                w.writerow([f"{t:.9f}", int(c), int(k)])
    except OSError as exc:
        raise OSError(f"cannot write request trace to {path}: {exc}") from exc


def read_trace(path) -> RequestTrace:
    with Path(path).open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    return RequestTrace(
        np.array([float(r["time_s"]) for r in rows]),
        np.array([int(r["consumer_node"]) for r in rows], dtype=np.int64),
        np.array([int(r["content_rank"]) for r in rows], dtype=np.int64),
    )
