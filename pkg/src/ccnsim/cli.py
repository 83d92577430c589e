"""Batch front end: ``ccnsim [flags]`` runs one experiment or a sweep and writes CSV.

Precedence is flags > config file (``--config``) > built-in defaults. The
seed falls back to ``$CCNSIM_SEED`` when neither flag nor file sets it.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .config import RunConfig
from .engine import build_topology, request_trace, sweep
from .strategy import STRATEGIES
from .workload import write_trace

log = logging.getLogger("ccnsim")

CSV_HEADER = ["strategy", "cache_size", "zipf_a", "seed", "interests", "hit_ratio", "avg_hops", "avg_latency_s"]

CACHE_RANGE = (100, 2000)
ZIPF_RANGE = (0.1, 1.0)


class ConfigError(ValueError):
    pass


def _strategy_list(text: str) -> tuple[str, ...]:
    text = text.strip().lower()
    if text == "all":
        return STRATEGIES
    kinds = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [k for k in kinds if k not in STRATEGIES]
    if bad or not kinds:
        raise ConfigError(f"strategy: unknown value {text!r}; expected {', '.join(STRATEGIES)} or 'all'")
    return kinds


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _bool(text: str) -> bool:
    t = str(text).strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


# key -> (converter, RunConfig field or None for front-end settings)
KEYS = {
    "nodes": (int, "nodes"),
    "links": (int, "links"),
    "delay_ms": (float, "delay"),
    "bandwidth_mbps": (float, "bandwidth"),
    "packet_bits": (float, "packet_bits"),
    "contents": (int, "contents"),
    "consumers": (int, "consumers"),
    "cache_size": (int, "cache_size"),
    "zipf_a": (float, "zipf_a"),
    "zipf_q": (float, "zipf_q"),
    "lambda": (float, "lam"),
    "duration": (float, "duration"),
    "strategy": (_strategy_list, None),
    "prob_p": (float, "prob_p"),
    "mpc_threshold": (float, "mpc_threshold"),
    "alpha": (float, "alpha"),
    "beta": (float, "beta"),
    "gamma": (float, "gamma"),
    "seed": (int, "seed"),
    "seeds": (int, "seeds"),
    "aggregation": (_bool, "aggregate"),
    "sweep": (str, None),
    "sweep_values": (_float_list, None),
    "out": (str, None),
    "dump_trace": (str, None),
    "dump_centrality": (_bool, None),
    "allow_out_of_range": (_bool, None),
}

# the front end takes delay in ms and bandwidth in Mbps
_UNIT = {"delay_ms": 1e-3, "bandwidth_mbps": 1e6}


@dataclass
class Invocation:
    run: RunConfig
    strategies: tuple[str, ...] = ("nvcp",)
    sweep: str | None = None
    sweep_values: list | None = None
    out: str | None = None
    dump_trace: str | None = None
    dump_centrality: bool = False
    allow_out_of_range: bool = False


def read_config_file(path) -> dict[str, str]:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ccnsim", description=__doc__.splitlines()[0],
                                argument_default=argparse.SUPPRESS)
    p.add_argument("--config", help="key=value settings file")
    p.add_argument("--nodes", type=str)
    p.add_argument("--links", type=str)
    p.add_argument("--delay-ms", type=str, help="per-hop propagation delay in ms (default 10)")
    p.add_argument("--bandwidth-mbps", type=str, help="link bandwidth in Mbps (default 10)")
    p.add_argument("--packet-bits", type=str, help="data packet size in bits (default 8000)")
    p.add_argument("--contents", type=str)
    p.add_argument("--consumers", type=str)
    p.add_argument("--cache-size", type=str)
    p.add_argument("--zipf-a", type=str)
    p.add_argument("--zipf-q", type=str)
    p.add_argument("--lambda", type=str, help="interests per second per consumer")
    p.add_argument("--duration", type=str, help="request generation window in seconds")
    p.add_argument("--strategy", type=str, help="nvcp|lce|prob|mpc, a comma list, or 'all'")
    p.add_argument("--prob-p", type=str)
    p.add_argument("--mpc-threshold", type=str)
    p.add_argument("--alpha", type=str)
    p.add_argument("--beta", type=str)
    p.add_argument("--gamma", type=str)
    p.add_argument("--seed", type=str)
    p.add_argument("--seeds", type=str, help="number of consecutive seeds starting at --seed")
    p.add_argument("--sweep", type=str, choices=["cache_size", "zipf_a"])
    p.add_argument("--sweep-values", type=str, help="comma-separated values for --sweep")
    p.add_argument("--no-aggregation", dest="aggregation", action="store_const", const="false")
    p.add_argument("--out", type=str, help="CSV output path (default stdout)")
    p.add_argument("--dump-trace", type=str, help="write the first seed's request trace CSV here")
    p.add_argument("--dump-centrality", action="store_const", const="true",
                   help="print per-node betweenness/eigenvector values to stderr")
    p.add_argument("--allow-out-of-range", action="store_const", const="true")
    return p


def parse_config(args=None, config_file=None, environ=None) -> Invocation:
    """Merge defaults, an optional settings file, and command-line flags."""
    environ = os.environ if environ is None else environ
    ns = vars(build_parser().parse_args(args))
    raw: dict[str, str] = {}
    file_path = ns.pop("config", None) or config_file
    if file_path:
        raw.update(read_config_file(file_path))
    raw.update(ns)
    if "seed" not in raw and environ.get("CCNSIM_SEED"):
        raw["seed"] = environ["CCNSIM_SEED"]

    fields, front = {}, {}
    for key, value in raw.items():
        if key not in KEYS:
            raise ConfigError(f"unknown setting {key!r}")
        conv, field = KEYS[key]
        try:
            val = conv(value) if isinstance(value, str) else value
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{key}: invalid value {value!r} ({exc})") from exc
        if key in _UNIT:
            val *= _UNIT[key]
        if field is None:
            front[key] = val
        else:
            fields[field] = val

    strategies = front.pop("strategy", ("nvcp",))
    fields["strategy"] = strategies[0]
    try:
        run = RunConfig(**fields)
        run.strategy_config()
        run.workload()
        run.link()
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    inv = Invocation(run, strategies, **front)
    _validate(inv)
    return inv


def _validate(inv: Invocation) -> None:
    run = inv.run
    if run.seeds < 1:
        raise ConfigError(f"seeds: need at least 1, got {run.seeds}")
    if not run.nodes - 1 <= run.links <= run.nodes * (run.nodes - 1) // 2:
        raise ConfigError(f"links: {run.links} infeasible for {run.nodes} nodes")
    if run.consumers > run.nodes - 1:
        raise ConfigError(f"consumers: {run.consumers} exceeds nodes - 1 = {run.nodes - 1}")
    if (inv.sweep is None) != (inv.sweep_values is None):
        raise ConfigError("sweep and sweep_values must be given together")
    if inv.sweep_values is not None and not inv.sweep_values:
        raise ConfigError("sweep_values: empty list")
    if inv.allow_out_of_range:
        return
    zipf_values = [run.zipf_a] + (inv.sweep_values if inv.sweep == "zipf_a" else [])
    cache_values = [run.cache_size] + (inv.sweep_values if inv.sweep == "cache_size" else [])
    for v in zipf_values:
        if not ZIPF_RANGE[0] <= v <= ZIPF_RANGE[1]:
            raise ConfigError(f"zipf_a: {v} outside {ZIPF_RANGE[0]}..{ZIPF_RANGE[1]} "
                              "(pass --allow-out-of-range to override)")
    for v in cache_values:
        if not CACHE_RANGE[0] <= v <= CACHE_RANGE[1]:
            raise ConfigError(f"cache_size: {v:g} outside {CACHE_RANGE[0]}..{CACHE_RANGE[1]} "
                              "(pass --allow-out-of-range to override)")


def format_rows(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        row = r.row()
        w.writerow([
            row["strategy"], row["cache_size"], f"{row['zipf_a']:.6f}", row["seed"], row["interests"],
            f"{row['hit_ratio']:.6f}", f"{row['avg_hops']:.6f}", f"{row['avg_latency_s']:.6f}",
        ])
    return buf.getvalue()


def emit_csv(reports, path=None) -> None:
    reports = list(reports)
    if not reports:
        raise ValueError("no reports to write")
    text = format_rows(reports)
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write results to {path}: {exc}") from exc


def execute(inv: Invocation) -> int:
    run = inv.run
    seeds = run.seed_list()
    values = inv.sweep_values
    if inv.sweep == "cache_size":
        values = [int(v) for v in values]

    if inv.dump_trace or inv.dump_centrality:
        g, spt, table = build_topology(run, seeds[0])
        if inv.dump_centrality:
            sys.stderr.write("node,betweenness,eigenvector\n")
            for i, b, e in table.report_rows():
                sys.stderr.write(f"{i},{b:.6f},{e:.6f}\n")
        if inv.dump_trace:
            write_trace(request_trace(run, seeds[0], g), inv.dump_trace)

    rows = sweep(run, inv.sweep, values or [], inv.strategies, seeds)
    failed = [r for r in rows if r.error]
    for r in failed:
        log.error("run failed (%s, seed %d): %s", r.config.strategy, r.seed, r.error)
    reports = [r.report for r in rows if r.report is not None]
    if reports:
        emit_csv(reports, inv.out)
    return 1 if failed else 0


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        inv = parse_config(argv)
    except ConfigError as exc:
        sys.stderr.write(f"ccnsim: configuration error: {exc}\n")
        return 2
    try:
        return execute(inv)
    except OSError as exc:
        sys.stderr.write(f"ccnsim: {exc}\n")
        return 1

