"""Cache admission policies applied on the data return path."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .centrality import DEFAULT_WEIGHTS, CentralityTable, check_weights
from .node import NodeState, connectivity, popularity


class Verdict(enum.Enum):
    CACHE = "cache"
    FORWARD = "forward"


CACHE = Verdict.CACHE
FORWARD = Verdict.FORWARD

STRATEGIES = ("nvcp", "lce", "prob", "mpc")


def nvcp_decide(popularity: float, node_value: float) -> Verdict:
    """Cache when popularity / node value >= 1.

    Written as a comparison so a zero node value needs no special case:
    any positive popularity caches, and 0 vs 0 forwards.
    """
    if node_value <= 0:
        return CACHE if popularity > 0 else FORWARD
    return CACHE if popularity >= node_value else FORWARD


def lce_decide() -> Verdict:
    return CACHE


def prob_decide(rng: np.random.Generator, p: float) -> Verdict:
    return CACHE if rng.random() < p else FORWARD


def mpc_decide(popularity: float, threshold: float) -> Verdict:
    return CACHE if popularity >= threshold else FORWARD


@dataclass(frozen=True)
class StrategyConfig:
    kind: str = "nvcp"
    prob_p: float = 0.5
    mpc_threshold: float = 0.5
    weights: tuple = DEFAULT_WEIGHTS

    def __post_init__(self):
        kind = self.kind.lower()
        if kind not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.kind!r}; expected one of {', '.join(STRATEGIES)}")
        object.__setattr__(self, "kind", kind)
        if not 0.0 <= self.prob_p <= 1.0:
            raise ValueError(f"prob_p must lie in [0, 1], got {self.prob_p}")
        if not 0.0 <= self.mpc_threshold <= 1.0:
            raise ValueError(f"mpc_threshold must lie in [0, 1], got {self.mpc_threshold}")
        object.__setattr__(self, "weights", check_weights(self.weights))

    @property
    def label(self) -> str:
        if self.kind == "prob":
            return f"prob({self.prob_p:g})"
        return self.kind


class CachePolicy:
    """Binds a :class:`StrategyConfig` to one run's centrality and RNG stream.

    ``decide`` is called once per data packet per router it reaches.
    ``network_max`` is the current maximum forwarded-interest count over
    all routers, which normalizes the connectivity term.
    """

    def __init__(self, config: StrategyConfig, centrality: CentralityTable | None = None,
                 rng: np.random.Generator | None = None):
        self.config = config
        self.rng = rng if rng is not None else np.random.default_rng(0)
        if config.kind == "nvcp":
            if centrality is None:
                raise ValueError("nvcp needs a centrality table")
            tbl = CentralityTable(centrality.betweenness, centrality.eigenvector, config.weights)
            self._static = tbl.static_part()
            self._alpha = tbl.weights[0]
        self.decide = getattr(self, f"_decide_{config.kind}")

    def node_value(self, node: NodeState, network_max: int) -> float:
        return self._alpha * connectivity(node, network_max) + float(self._static[node.node_id])

    def _decide_nvcp(self, node: NodeState, content, network_max: int) -> Verdict:
        return nvcp_decide(popularity(node, content), self.node_value(node, network_max))

    def _decide_lce(self, node, content, network_max) -> Verdict:
        return CACHE

    def _decide_prob(self, node, content, network_max) -> Verdict:
        return prob_decide(self.rng, self.config.prob_p)

    def _decide_mpc(self, node, content, network_max) -> Verdict:
        return mpc_decide(popularity(node, content), self.config.mpc_threshold)
