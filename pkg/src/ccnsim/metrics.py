"""Per-run accumulation of hit ratio, hop count and latency."""

from __future__ import annotations

from dataclasses import dataclass, field

CACHE = "cache"
SERVER = "server"


@dataclass
class MetricsReport:
    strategy: str = ""
    cache_size: int = 0
    zipf_a: float = 0.0
    seed: int = 0
    interests_issued: int = 0
    deliveries: int = 0
    cache_hits: int = 0
    hop_sum: int = 0
    latency_sum: float = 0.0
    diagnostics: dict = field(default_factory=dict)

    @property
    def hit_ratio(self) -> float:
        return self.cache_hits / self.interests_issued if self.interests_issued else 0.0

    @property
    def avg_hop_count(self) -> float:
        return self.hop_sum / self.deliveries if self.deliveries else 0.0

    @property
    def avg_latency(self) -> float:
        return self.latency_sum / self.deliveries if self.deliveries else 0.0

    def row(self) -> dict:
        return {
            "strategy": self.strategy,
            "cache_size": self.cache_size,
            "zipf_a": self.zipf_a,
            "seed": self.seed,
            "interests": self.interests_issued,
            "hit_ratio": self.hit_ratio,
            "avg_hops": self.avg_hop_count,
            "avg_latency_s": self.avg_latency,
        }


def record_issue(report: MetricsReport, count: int = 1) -> MetricsReport:
    report.interests_issued += count
    return report


def record_delivery(report: MetricsReport, satisfied_at: str, hops: int, latency: float) -> MetricsReport:
    if hops < 0 or latency < 0:
        raise ValueError(f"negative hops/latency: {hops}, {latency}")
    if satisfied_at not in (CACHE, SERVER):
        raise ValueError(f"satisfied_at must be 'cache' or 'server', got {satisfied_at!r}")
    report.deliveries += 1
    if satisfied_at == CACHE:
        report.cache_hits += 1
    report.hop_sum += hops
    report.latency_sum += latency
    return report


def merge(reports) -> MetricsReport:
    """Pool raw tallies of several runs into one report (labels from the first)."""
    reports = list(reports)
    out = MetricsReport(reports[0].strategy, reports[0].cache_size, reports[0].zipf_a, reports[0].seed)
    for r in reports:
        out.interests_issued += r.interests_issued
        out.deliveries += r.deliveries
        out.cache_hits += r.cache_hits
        out.hop_sum += r.hop_sum
        out.latency_sum += r.latency_sum
    return out
