"""Discrete-event simulation of interest/data exchange over a router graph.

Every link traversal is one event. Events are ordered by ``(time, seq)``
where ``seq`` is a global insertion counter, so equal timestamps resolve
the same way on every run.
"""

from __future__ import annotations

import heapq
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .centrality import CentralityTable
from .config import LinkModel, RunConfig
from .metrics import CACHE, SERVER, MetricsReport, record_delivery, record_issue
from .node import Action, Data, Interest, NodeState, PendingRequest, process_data, process_interest
from .strategy import CachePolicy, StrategyConfig, Verdict
from .topology import Graph, ShortestPathTable, all_pairs_shortest_paths, generate_random_graph
from .workload import RequestTrace, WorkloadConfig, generate_requests, place_consumers_and_server

log = logging.getLogger(__name__)

INTEREST_ARRIVAL = 0
DATA_ARRIVAL = 1

# sub-stream ids under each run seed
_TOPOLOGY, _PLACEMENT, _WORKLOAD, _STRATEGY = range(4)


def stream(seed: int, purpose: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), purpose])


class SimulationAnomaly(RuntimeError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Delivery:
    interest_id: int
    consumer: int
    content: int
    hops: int
    latency: float
    from_cache: bool
    interest_trace: tuple
    data_trace: tuple


class Simulation:
    """One seeded run. Build, call :meth:`run`, then inspect ``nodes``/``report``."""

    def __init__(self, g: Graph, spt: ShortestPathTable, centrality: CentralityTable,
                 strategy: StrategyConfig, workload: WorkloadConfig, link: LinkModel,
                 cache_capacity: int, seed: int, aggregate: bool = True,
                 requests: RequestTrace | None = None, placement=None, keep_log: bool = False):
        if cache_capacity < 1:
            raise ValueError(f"cache_capacity must be >= 1, got {cache_capacity}")
        self.g = g
        self.spt = spt
        self.link = link
        self.seed = seed
        self.aggregate = aggregate
        self.cache_capacity = cache_capacity
        if placement is None:
            placement = place_consumers_and_server(g, workload.consumer_count, stream(seed, _PLACEMENT))
        self.consumers, self.server = placement
        if requests is None:
            requests = generate_requests(workload, self.consumers, stream(seed, _WORKLOAD))
        self.requests = requests
        self.policy = CachePolicy(strategy, centrality, stream(seed, _STRATEGY))
        self.nodes = [NodeState(i, cache_capacity, serves_origin=(i == self.server))
                      for i in range(g.node_count)]
        self.report = MetricsReport(strategy.label, cache_capacity, workload.zipf_a, seed)
        self.keep_log = keep_log
        self.log: list[Delivery] = []
        self.network_max = 0

    def run(self) -> MetricsReport:
        nodes = self.nodes
        decide = self.policy.decide
        next_hop = self.spt.next_hop
        server = self.server
        hop = self.link.hop_latency
        aggregate = self.aggregate
        report = self.report
        keep_log = self.keep_log
        cap = self.cache_capacity
        heap = []
        push, pop = heapq.heappush, heapq.heappop

        req = self.requests
        n_req = len(req)
        record_issue(report, n_req)
        delivered = np.zeros(n_req, dtype=np.int64)
        path_mismatch = 0
        seq = 0
        for i, (t, c, k) in enumerate(zip(req.times.tolist(), req.consumers.tolist(), req.contents.tolist())):
            heap.append((t, seq, INTEREST_ARRIVAL, c, Interest(i, k, c, t, []), None))
            seq += 1
        heapq.heapify(heap)

        def fan_out(now, data, records):
            nonlocal seq, path_mismatch
            last = len(records) - 1
            for j, rec in enumerate(records):
                pkt = data if j == last else data.copy()
                if rec.face is None:
                    interest = rec.interest
                    iid = interest.interest_id
                    delivered[iid] += 1
                    itrace = interest.path_trace
                    if pkt.path_trace[-len(itrace):] != itrace[::-1]:
                        path_mismatch += 1
                    hops = len(pkt.path_trace) - 1
                    latency = now - interest.issue_time
                    record_delivery(report, CACHE if pkt.from_cache else SERVER, hops, latency)
                    if keep_log:
                        self.log.append(Delivery(iid, interest.consumer, interest.content, hops, latency,
                                                 pkt.from_cache, tuple(itrace), tuple(pkt.path_trace)))
                else:
                    push(heap, (now + hop, seq, DATA_ARRIVAL, rec.face, pkt, None))
                    seq += 1

        while heap:
            now, _, kind, v, pkt, face = pop(heap)
            node = nodes[v]
            pkt.path_trace.append(v)
            if kind == INTEREST_ARRIVAL:
                action = process_interest(node, pkt, face, now, aggregate)
                if action is Action.FORWARD:
                    if node.path_count > self.network_max:
                        self.network_max = node.path_count
                    if v == server:
                        data = Data(pkt.content, pkt.interest_id, False, v, [v])
                        fan_out(now, data, process_data(node, data, False, aggregate))
                    else:
                        push(heap, (now + hop, seq, INTEREST_ARRIVAL, int(next_hop[v, server]), pkt, v))
                        seq += 1
                elif action is Action.RETURN_DATA:
                    data = Data(pkt.content, pkt.interest_id, True, v, [v])
                    # answered in place: no PIT entry was made, deliver straight back down
                    fan_out(now, data, [PendingRequest(pkt, face, now)])
            else:
                verdict = decide(node, pkt.content, self.network_max)
                records = process_data(node, pkt, verdict is Verdict.CACHE, aggregate)
                if len(node.content_store) > cap:
                    raise SimulationAnomaly(f"content store at node {v} exceeds capacity {cap}")
                fan_out(now, pkt, records)

        diag = {
            "delivered": int(delivered.sum()),
            "undelivered": int((delivered == 0).sum()),
            "duplicate_deliveries": int((delivered > 1).sum()),
            "pit_leaks": sum(len(n.pit) for n in nodes),
            "orphan_data": sum(n.orphan_data for n in nodes),
            "path_mismatches": path_mismatch,
            "peak_occupancy": max(n.peak_occupancy for n in nodes),
            "server": server,
            "consumers": list(self.consumers),
        }
        report.diagnostics = diag
        problems = [k for k in ("undelivered", "duplicate_deliveries", "pit_leaks", "orphan_data", "path_mismatches")
                    if diag[k]]
        if diag["peak_occupancy"] > cap:
            problems.append("peak_occupancy")
        if problems:
            raise SimulationAnomaly(
                "run anomalies: " + ", ".join(f"{k}={diag[k]}" for k in problems), report)
        return report


def run(g, spt, centrality, strategy, workload, link, cache_capacity, seed, **kwargs) -> MetricsReport:
    return Simulation(g, spt, centrality, strategy, workload, link, cache_capacity, seed, **kwargs).run()


def build_topology(cfg: RunConfig, seed: int):
    """Graph, shortest paths and centrality for one seed (weights from ``cfg``)."""
    g = generate_random_graph(cfg.nodes, cfg.links, stream(seed, _TOPOLOGY))
    spt = all_pairs_shortest_paths(g)
    return g, spt, CentralityTable.compute(g, spt, cfg.weights)


def request_trace(cfg: RunConfig, seed: int, g: Graph) -> RequestTrace:
    """The request stream a run of ``cfg`` with ``seed`` on ``g`` will replay."""
    consumers, _ = place_consumers_and_server(g, cfg.consumers, stream(seed, _PLACEMENT))
    return generate_requests(cfg.workload(), consumers, stream(seed, _WORKLOAD))


def simulate(cfg: RunConfig, seed: int | None = None, topology=None, **kwargs) -> MetricsReport:
    seed = cfg.seed if seed is None else seed
    g, spt, table = topology if topology is not None else build_topology(cfg, seed)
    return run(g, spt, table, cfg.strategy_config(), cfg.workload(), cfg.link(),
               cfg.cache_size, seed, aggregate=cfg.aggregate, **kwargs)


@dataclass
class SweepRow:
    config: RunConfig
    seed: int
    report: MetricsReport | None
    error: str | None = None


SWEEP_PARAMETERS = {"cache_size": "cache_size", "zipf_a": "zipf_a"}


def _run_cell(cell):
    cfg, seed = cell
    try:
        return SweepRow(cfg, seed, simulate(cfg, seed))
    except SimulationAnomaly as exc:
        return SweepRow(cfg, seed, exc.report, str(exc))
    except Exception as exc:  # one bad cell must not sink the sweep
        log.exception("sweep cell failed: %s seed=%s", cfg.strategy, seed)
        return SweepRow(cfg, seed, None, f"{type(exc).__name__}: {exc}")


def sweep_cells(base: RunConfig, parameter: str | None, values, strategies, seeds):
    if parameter is not None and parameter not in SWEEP_PARAMETERS:
        raise ValueError(f"cannot sweep {parameter!r}; choose from {sorted(SWEEP_PARAMETERS)}")
    values = list(values) if parameter is not None else [None]
    strategies, seeds = list(strategies), list(seeds)
    if not values or not strategies or not seeds:
        raise ValueError("sweep needs nonempty values, strategies and seeds")
    cells = []
    for value in values:
        cfg = base if parameter is None else base.replace(**{SWEEP_PARAMETERS[parameter]: value})
        for kind in strategies:
            for seed in seeds:
                cells.append((cfg.replace(strategy=kind), seed))
    return cells


def sweep(base: RunConfig, parameter: str | None, values, strategies, seeds, workers: int = 1) -> list[SweepRow]:
    """One run per (value, strategy, seed), rows in that nesting order.

    Failed cells come back as rows with ``error`` set.
    """
    cells = sweep_cells(base, parameter, values, strategies, seeds)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_cell, cells))
    # topology depends only on (nodes, links, weights, seed); reuse it across cells
    topologies = {}
    rows = []
    for cfg, seed in cells:
        key = (cfg.nodes, cfg.links, cfg.weights, seed)
        try:
            if key not in topologies:
                topologies[key] = build_topology(cfg, seed)
            rows.append(SweepRow(cfg, seed, simulate(cfg, seed, topology=topologies[key])))
        except SimulationAnomaly as exc:
            rows.append(SweepRow(cfg, seed, exc.report, str(exc)))
        except Exception as exc:
            log.exception("sweep cell failed: %s seed=%s", cfg.strategy, seed)
            rows.append(SweepRow(cfg, seed, None, f"{type(exc).__name__}: {exc}"))
    return rows
