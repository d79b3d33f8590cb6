"""Command-line experiment harness.

Every subcommand takes its parameters from an optional JSON ``--config``
file overridden by command-line flags.  Reports go to ``--out DIR`` (one
file per report) or to standard output.  Exit status: 0 on success, 2 on
an invalid configuration, 3 when an operation fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import statistics
import sys
from dataclasses import dataclass, field, fields
from datetime import datetime, timezone

from . import __version__
from .generators import construct_low_mu_graph, construct_short_path_graph, random_regular
from .graph import Graph, format_graph, is_induced_cycle, is_induced_path, read_graph
from .oracle import dense_spectrum, longest_induced_cycle_exact, longest_induced_path_exact, mu_exact
from .percolation import PercolationParams, component_stats, excess_bound_report, site_percolate
from .search import (
    InvariantChecker,
    InvariantViolation,
    dfs_induced_path,
    find_long_induced_cycle,
    mu_lower_certificate,
    path_target,
)
from .seeding import seed_derive
from .spectral import DEFAULT_TOL, NoConvergence, extremal_eigenvalues

EXIT_OK, EXIT_CONFIG, EXIT_OPERATION = 0, 2, 3

PERCOLATE_COLUMNS = ["seed", "n", "d", "epsilon", "kept", "L1_order", "L1_edges", "excess",
                     "stray_edges", "predicted_L1_order", "predicted_L1_edges"]
EXPERIMENT_COLUMNS = ["n", "d", "epsilon", "trials", "median_kept", "median_L1_order",
                      "predicted_L1_order", "median_L1_edges", "predicted_L1_edges",
                      "median_excess", "median_excess_ratio", "median_path_length",
                      "path_target"]


class ConfigInvalid(ValueError):
    def __init__(self, errors: dict):
        super().__init__("; ".join(f"{k}: {v}" for k, v in errors.items()))
        self.errors = errors


@dataclass
class ExperimentConfig:
    n: int | None = None
    d: int | None = None
    epsilon: float = 0.25
    delta: float | None = None
    seed: int = 0
    trials: int = 1
    retries: int = 20
    tol: float = DEFAULT_TOL
    d0: int | None = None
    kind: str = "short-path"
    graph: str | None = None
    out: str | None = None
    what: str = "path"
    trace: bool = False
    grid: dict = field(default_factory=dict)

    def validate(self, command: str) -> None:
        errs = {}
        if self.trials < 1:
            errs["trials"] = "must be at least 1"
        if self.retries < 1:
            errs["retries"] = "must be at least 1"
        if not self.tol > 0:
            errs["tol"] = "must be positive"
        if not 0 <= self.seed < 2 ** 64:
            errs["seed"] = "must be a 64-bit unsigned integer"
        if command in ("percolate", "find-path", "find-cycle", "certificate") and not self.epsilon > 0:
            errs["epsilon"] = "must be positive"
        needs_graph = command in ("spectral", "percolate", "find-path", "find-cycle",
                                  "certificate", "oracle")
        if command == "generate" or (needs_graph and self.graph is None):
            for name in ("n", "d"):
                if getattr(self, name) is None:
                    errs[name] = "required (or pass --graph)" if needs_graph else "required"
            if self.n is not None and self.d is not None:
                if not 0 <= self.d < self.n:
                    errs["d"] = f"need 0 <= d < n (n={self.n})"
                elif (self.n * self.d) % 2:
                    errs["n"] = "n*d must be even"
        if self.graph is not None and not os.path.exists(self.graph):
            errs["graph"] = f"no such file {self.graph!r}"
        if command == "construct":
            if self.kind not in ("short-path", "low-mu"):
                errs["kind"] = "must be 'short-path' or 'low-mu'"
            for name in ("n", "d", "delta"):
                if getattr(self, name) is None:
                    errs[name] = "required"
            if self.delta is not None and not self.delta > 0:
                errs["delta"] = "must be positive"
            if self.out is None:
                errs["out"] = "required (graph and parameter sidecar are written there)"
        if command == "oracle" and self.what not in ("path", "cycle", "mu", "spectrum"):
            errs["what"] = "must be one of path, cycle, mu, spectrum"
        if command == "experiment":
            grid = {"n": [self.n], "d": [self.d], "epsilon": [self.epsilon], **self.grid}
            for key in ("n", "d", "epsilon"):
                vals = grid.get(key)
                if not vals or any(v is None for v in vals):
                    errs[f"grid.{key}"] = "at least one value required"
            unknown = set(self.grid) - {"n", "d", "epsilon"}
            if unknown:
                errs["grid"] = f"unknown keys {sorted(unknown)}"
        if errs:
            raise ConfigInvalid(errs)


def load_config(path: str | None, overrides: dict) -> ExperimentConfig:
    data = {}
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigInvalid({"config": str(exc)}) from exc
        if not isinstance(data, dict):
            raise ConfigInvalid({"config": "top level must be a JSON object"})
    known = {f.name for f in fields(ExperimentConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigInvalid({k: "unknown field" for k in sorted(unknown)})
    data.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return ExperimentConfig(**data)
    except TypeError as exc:
        raise ConfigInvalid({"config": str(exc)}) from exc


# ---------------------------------------------------------------------------
# output helpers


def _metadata_line() -> str:
    stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return f"# metadata tool=inducedpaths version={__version__} created={stamp}\n"


def _fmt(x) -> str:
    if isinstance(x, float):
        return "nan" if math.isnan(x) else repr(x)
    return str(x)


def _csv_text(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row[c]) for c in columns])
    return _metadata_line() + buf.getvalue()


def _emit(cfg: ExperimentConfig, name: str, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
        return
    os.makedirs(cfg.out, exist_ok=True)
    with open(os.path.join(cfg.out, name), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=True) + "\n"


def _host(cfg: ExperimentConfig) -> Graph:
    if cfg.graph is not None:
        return read_graph(cfg.graph)
    return random_regular(cfg.n, cfg.d, seed_derive(cfg.seed, "graph", 0))


def _degree(G: Graph) -> int:
    deg = G.degrees
    if len(deg) == 0 or not (deg == deg[0]).all() or deg[0] == 0:
        raise ValueError("host graph must be regular with positive degree")
    return int(deg[0])


# ---------------------------------------------------------------------------
# subcommands


def cmd_generate(cfg):
    G = random_regular(cfg.n, cfg.d, cfg.seed)
    _emit(cfg, "graph.txt", format_graph(G))


def cmd_construct(cfg):
    build = construct_short_path_graph if cfg.kind == "short-path" else construct_low_mu_graph
    G, params = build(cfg.d, cfg.delta, cfg.n, cfg.seed, d0=cfg.d0)
    _emit(cfg, "graph.txt", format_graph(G))
    _emit(cfg, "params.json", _json(params.to_dict()))


def cmd_spectral(cfg):
    G = _host(cfg)
    try:
        report = extremal_eigenvalues(G, tol=cfg.tol)
    except NoConvergence as exc:
        report = exc.report
    _emit(cfg, "spectral.json", _json(report.to_dict()))


def percolation_rows(G: Graph, epsilon: float, master: int, trials: int) -> list[dict]:
    d = _degree(G)
    rows = []
    for i in range(trials):
        params = PercolationParams.supercritical(epsilon, d, seed_derive(master, "trial", i))
        stats = component_stats(G, site_percolate(G, params), params)
        rows.append({
            "seed": params.seed, "n": G.n, "d": d, "epsilon": float(epsilon),
            "kept": stats.kept, "L1_order": stats.L1_order, "L1_edges": stats.L1_edges,
            "excess": stats.total_excess, "stray_edges": stats.stray_edges,
            "predicted_L1_order": stats.predicted_L1_order,
            "predicted_L1_edges": stats.predicted_L1_edges,
        })
    return rows


def cmd_percolate(cfg):
    G = _host(cfg)
    _emit(cfg, "percolate.csv", _csv_text(PERCOLATE_COLUMNS,
                                          percolation_rows(G, cfg.epsilon, cfg.seed, cfg.trials)))


def cmd_find_path(cfg):
    G = _host(cfg)
    d = _degree(G)
    params = PercolationParams.supercritical(cfg.epsilon, d, seed_derive(cfg.seed, "path", 0))
    checker = InvariantChecker(G)
    trace = []

    def observer(state, event, v):
        checker(state, event, v)
        if cfg.trace and event == "expose":
            trace.append({"exposure": state.exposures, **state.sizes()})

    path, _ = dfs_induced_path(G, params, None, int(math.floor(cfg.epsilon * G.n)),
                               observer=observer)
    if not is_induced_path(G, path.vertices):
        raise InvariantViolation("emitted path is not induced in the host graph")
    _emit(cfg, "path.json", _json({
        "vertices": list(path.vertices), "length": len(path),
        "target_length": path_target(G.n, d, cfg.epsilon), "retries_used": 1,
        "invariant_check": "passed", "is_induced_path": True,
    }))
    if cfg.trace:
        _emit(cfg, "trace.csv", _csv_text(["exposure", "T", "U", "S1", "S2", "W"], trace))


def cmd_find_cycle(cfg):
    G = _host(cfg)
    res = find_long_induced_cycle(G, cfg.epsilon, cfg.seed, cfg.retries)
    if not is_induced_cycle(G, res.cycle.vertices):
        raise InvariantViolation("emitted cycle is not induced in the host graph")
    _emit(cfg, "cycle.json", _json({
        "vertices": list(res.cycle.vertices), "length": len(res.cycle),
        "target_length": res.target, "retries_used": res.attempts,
        "shortfall": res.shortfall, "path_length": res.path_length,
        "invariant_check": "passed", "is_induced_cycle": True,
    }))


def cmd_certificate(cfg):
    G = _host(cfg)
    d = _degree(G)
    params = PercolationParams.supercritical(cfg.epsilon, d, seed_derive(cfg.seed, "path", 0))
    path, _ = dfs_induced_path(G, params, None, int(math.floor(cfg.epsilon * G.n)))
    cert = mu_lower_certificate(G, path)
    _emit(cfg, "certificate.json", _json(cert.to_dict()))


def cmd_oracle(cfg):
    G = _host(cfg)
    if cfg.what == "path":
        p = longest_induced_path_exact(G)
        out = {"what": "path", "vertices": list(p.vertices), "length": len(p)}
    elif cfg.what == "cycle":
        c = longest_induced_cycle_exact(G)
        out = {"what": "cycle", "vertices": None if c is None else list(c.vertices),
               "length": 0 if c is None else len(c)}
    elif cfg.what == "mu":
        out = {"what": "mu", "mu": mu_exact(G), "includes_empty_subgraph": True}
    else:
        out = {"what": "spectrum", "eigenvalues": dense_spectrum(G).tolist()}
    _emit(cfg, "oracle.json", _json(out))


def experiment_rows(cfg: ExperimentConfig) -> list[dict]:
    grid = {"n": [cfg.n], "d": [cfg.d], "epsilon": [cfg.epsilon], **cfg.grid}
    rows = []
    for n in grid["n"]:
        for d in grid["d"]:
            G = random_regular(int(n), int(d), seed_derive(cfg.seed, f"graph:{n}:{d}", 0))
            for eps in grid["epsilon"]:
                label = f"trial:{n}:{d}:{eps!r}"
                trial = []
                for i in range(cfg.trials):
                    params = PercolationParams.supercritical(float(eps), int(d),
                                                             seed_derive(cfg.seed, label, i))
                    stats = component_stats(G, site_percolate(G, params), params)
                    path, _ = dfs_induced_path(G, params, None, int(math.floor(eps * G.n)))
                    trial.append((stats, len(path)))
                med = lambda xs: float(statistics.median(xs))  # noqa: E731
                rows.append({
                    "n": int(n), "d": int(d), "epsilon": float(eps), "trials": cfg.trials,
                    "median_kept": med([s.kept for s, _ in trial]),
                    "median_L1_order": med([s.L1_order for s, _ in trial]),
                    "predicted_L1_order": trial[0][0].predicted_L1_order,
                    "median_L1_edges": med([s.L1_edges for s, _ in trial]),
                    "predicted_L1_edges": trial[0][0].predicted_L1_edges,
                    "median_excess": med([s.total_excess for s, _ in trial]),
                    "median_excess_ratio": med([excess_bound_report(s, float(eps), int(n), int(d)).ratio
                                                for s, _ in trial]),
                    "median_path_length": med([k for _, k in trial]),
                    "path_target": path_target(int(n), int(d), float(eps)),
                })
    return rows


def cmd_experiment(cfg):
    _emit(cfg, "experiment.csv", _csv_text(EXPERIMENT_COLUMNS, experiment_rows(cfg)))


COMMANDS = {
    "generate": cmd_generate,
    "construct": cmd_construct,
    "spectral": cmd_spectral,
    "percolate": cmd_percolate,
    "find-path": cmd_find_path,
    "find-cycle": cmd_find_cycle,
    "certificate": cmd_certificate,
    "oracle": cmd_oracle,
    "experiment": cmd_experiment,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inducedpaths", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config")
        p.add_argument("--n", type=int)
        p.add_argument("--d", type=int)
        p.add_argument("--epsilon", type=float)
        p.add_argument("--delta", type=float)
        p.add_argument("--seed", type=int)
        p.add_argument("--trials", type=int)
        p.add_argument("--graph")
        p.add_argument("--out")
        p.add_argument("--tol", type=float)
        p.add_argument("--retries", type=int)
        p.add_argument("--d0", type=int)
        p.add_argument("--trace", action="store_true", default=None)
        if name == "oracle":
            p.add_argument("--what", choices=["path", "cycle", "mu", "spectrum"])
        if name == "construct":
            p.add_argument("--kind", choices=["short-path", "low-mu"])
    return parser


def run(command: str, cfg: ExperimentConfig) -> int:
    try:
        cfg.validate(command)
    except ConfigInvalid as exc:
        for k, v in exc.errors.items():
            print(f"config error: {k}: {v}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        COMMANDS[command](cfg)
    except InvariantViolation:
        raise
    except Exception as exc:  # surfaced with context, never swallowed silently
        print(f"{command} failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_OPERATION
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {k: v for k, v in vars(args).items() if k not in ("command", "config")}
    try:
        cfg = load_config(args.config, overrides)
    except ConfigInvalid as exc:
        for k, v in exc.errors.items():
            print(f"config error: {k}: {v}", file=sys.stderr)
        return EXIT_CONFIG
    return run(args.command, cfg)


if __name__ == "__main__":
    sys.exit(main())
