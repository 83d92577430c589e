"""Experiment configuration with the default simulation parameters."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .strategy import StrategyConfig
from .workload import WorkloadConfig


@dataclass(frozen=True)
class LinkModel:
    """Fixed-latency links; every hop costs propagation plus serialization."""

    per_hop_delay: float = 0.010
    bandwidth: float = 10e6
    data_packet_bits: float = 8_000

    def __post_init__(self):
        if self.per_hop_delay < 0 or self.bandwidth <= 0 or self.data_packet_bits < 0:
            raise ValueError(f"invalid link model {self}")
        if self.hop_latency <= 0:
            raise ValueError("per-hop latency must be strictly positive")

    @property
    def hop_latency(self) -> float:
        return self.per_hop_delay + self.data_packet_bits / self.bandwidth


@dataclass(frozen=True)
class RunConfig:
    nodes: int = 50
    links: int = 150
    delay: float = 0.010
    bandwidth: float = 10e6
    packet_bits: float = 8_000
    contents: int = 10_000
    consumers: int = 18
    cache_size: int = 1_000
    zipf_a: float = 0.7
    zipf_q: float = 0.0
    lam: float = 100.0
    duration: float = 100.0
    strategy: str = "nvcp"
    prob_p: float = 0.5
    mpc_threshold: float = 0.5
    alpha: float = 1 / 3
    beta: float = 1 / 3
    gamma: float = 1 / 3
    seed: int = 0
    seeds: int = 1
    aggregate: bool = True

    def replace(self, **changes) -> "RunConfig":
        return dataclasses.replace(self, **changes)

    @property
    def weights(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)

    def workload(self) -> WorkloadConfig:
        return WorkloadConfig(self.contents, self.zipf_a, self.zipf_q, self.lam, self.consumers, self.duration)

    def link(self) -> LinkModel:
        return LinkModel(self.delay, self.bandwidth, self.packet_bits)

    def strategy_config(self, kind: str | None = None) -> StrategyConfig:
        return StrategyConfig(kind or self.strategy, self.prob_p, self.mpc_threshold, self.weights)

    def seed_list(self) -> list[int]:
        return [self.seed + i for i in range(self.seeds)]
