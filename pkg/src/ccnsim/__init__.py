"""Discrete-event simulator for on-path caching in content-centric networks."""

from .centrality import CentralityTable, betweenness_centrality, composite_value, eigenvector_centrality
from .config import LinkModel, RunConfig
from .engine import Simulation, SimulationAnomaly, run, simulate, sweep
from .metrics import MetricsReport
from .strategy import StrategyConfig
from .topology import Graph, all_pairs_shortest_paths, generate_random_graph, route_next_hop
from .workload import WorkloadConfig, ZipfMandelbrot

__all__ = [
    "CentralityTable", "Graph", "LinkModel", "MetricsReport", "RunConfig", "Simulation",
    "SimulationAnomaly", "StrategyConfig", "WorkloadConfig", "ZipfMandelbrot",
    "all_pairs_shortest_paths", "betweenness_centrality", "composite_value",
    "eigenvector_centrality", "generate_random_graph", "route_next_hop", "run", "simulate", "sweep",
]
