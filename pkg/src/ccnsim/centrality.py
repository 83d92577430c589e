"""Static node-value attributes: betweenness and eigenvector centrality.

Both are computed once per topology. The traffic-driven connectivity term
lives on the node state (see :mod:`ccnsim.node`); :func:`composite_value`
blends all three.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .topology import Graph, ShortestPathTable

DEFAULT_WEIGHTS = (1 / 3, 1 / 3, 1 / 3)


class ConvergenceError(RuntimeError):
    pass


def check_weights(weights) -> tuple[float, float, float]:
    alpha, beta, gamma = (float(w) for w in weights)
    if min(alpha, beta, gamma) < 0:
        raise ValueError(f"weights must be non-negative, got {weights}")
    if abs(alpha + beta + gamma - 1.0) > 1e-9:
        raise ValueError(f"weights must sum to 1, got {alpha + beta + gamma!r}")
    return alpha, beta, gamma


def betweenness_centrality(g: Graph, spt: ShortestPathTable) -> np.ndarray:
    """Normalized betweenness over unordered pairs, values in [0, 1].

    Uses the pair-dependency identity ``sigma_st(v) = sigma_sv * sigma_vt``
    whenever ``d(s, v) + d(v, t) = d(s, t)``.
    """
    n = g.node_count
    if n < 3:
        raise ValueError(f"betweenness normalization needs n >= 3, got {n}")
    dist, sigma = spt.dist, spt.sigma
    out = np.zeros(n)
    for v in range(n):
        on_path = dist[:, v][:, None] + dist[v, :][None, :] == dist
        dep = np.where(on_path, np.outer(sigma[:, v], sigma[v, :]) / sigma, 0.0)
        dep[v, :] = 0.0
        dep[:, v] = 0.0
        np.fill_diagonal(dep, 0.0)
        # ordered pairs count each {s, t} twice
        out[v] = dep.sum() / 2.0
    return out * 2.0 / ((n - 1) * (n - 2))


def eigenvector_centrality(
    g: Graph, tol: float = 1e-9, max_iter: int = 10_000, shift: float = 1.0
) -> np.ndarray:
    """Principal eigenvector of the adjacency matrix, max-normalized to 1.

    Power iteration from the all-ones vector on ``A + shift * I``. The
    shift leaves the principal eigenvector unchanged and breaks the
    +/- lambda tie of bipartite graphs.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = g.adjacency.astype(np.float64) + shift * np.eye(g.node_count)
    x = np.ones(g.node_count)
    for _ in range(max_iter):
        y = a @ x
        y /= y.max()
        if np.abs(y - x).max() < tol:
            return y
        x = y
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def rayleigh_quotient(g: Graph, x: np.ndarray) -> float:
    a = g.adjacency.astype(np.float64)
    return float(x @ a @ x / (x @ x))


def composite_value(c_s: float, c_b: float, c_e: float, weights=DEFAULT_WEIGHTS) -> float:
    alpha, beta, gamma = check_weights(weights)
    return alpha * c_s + beta * c_b + gamma * c_e


@dataclass(frozen=True)
class CentralityTable:
    betweenness: np.ndarray
    eigenvector: np.ndarray
    weights: tuple[float, float, float] = DEFAULT_WEIGHTS

    def __post_init__(self):
        object.__setattr__(self, "weights", check_weights(self.weights))

    @classmethod
    def compute(cls, g: Graph, spt: ShortestPathTable, weights=DEFAULT_WEIGHTS) -> "CentralityTable":
        bc = betweenness_centrality(g, spt)
        ec = eigenvector_centrality(g)
        bc.setflags(write=False)
        ec.setflags(write=False)
        return cls(bc, ec, weights)

    def static_part(self) -> np.ndarray:
        """``beta * C_B + gamma * C_E`` per node; add ``alpha * C_S`` at run time."""
        _, beta, gamma = self.weights
        return beta * self.betweenness + gamma * self.eigenvector

    def node_value(self, node: int, c_s: float) -> float:
        return composite_value(c_s, self.betweenness[node], self.eigenvector[node], self.weights)

    def report_rows(self):
        for i, (b, e) in enumerate(zip(self.betweenness, self.eigenvector)):
            yield i, float(b), float(e)
