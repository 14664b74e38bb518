"""Experiment sweeps: run methods over parameter grids and emit CSV rows.

A sweep enumerates (method x sweep point) deterministically from the config;
every point derives its own RNG stream from (master_seed, point index), so
rows are reproducible end-to-end and independent of how many workers run
them.  A method that cannot reach the coverage threshold records a
``failed`` row instead of aborting the sweep.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from ._rng import derive_key
from .generate import generate_synthetic
from .graph import DirectedGraph, assign_uniform, assign_weighted_cascade, load_edge_list
from .greedy import SeedSet, greedy_maxinf, greedy_mintss, mintime
from .heuristics import HEURISTIC_KINDS, HeuristicSpec, heuristic_mintime, heuristic_mintss, rank_nodes
from .oracles import MonteCarloSpreadOracle
from .proplog import estimate_probs_mle, load_propagation_log
from .simulate import estimate_spread
from .validation import check_eta_eps, check_model, check_n_sims, check_seed

__all__ = ["ExperimentConfig", "ResultRow", "ExperimentResult", "run_experiment", "emit_csv"]

CSV_COLUMNS = ("method", "task", "eta", "k", "epsilon", "seed_size", "seed_cost",
               "time_R", "coverage", "std_err", "wall_ms", "status")

TASKS = ("mintss", "mintime", "maxinf", "estimate")
METHODS = ("greedy",) + HEURISTIC_KINDS


@dataclass
class ExperimentConfig:
    """Everything needed to run one sweep; see validate() for the rules."""

    graph_path: str | None = None
    generator: dict | None = None            # {"kind", "n", "params", "seed"}
    default_prob: float | None = None
    symmetrize: bool = False
    cost_path: str | None = None
    prob_scheme: dict = field(default_factory=lambda: {"kind": "as-given"})
    model: str = "ic"
    task: str = "mintss"
    etas: tuple[float, ...] = ()
    eps: float = 0.5
    ks: tuple[int, ...] = ()
    horizon: int | None = None               # estimate task only
    seeds: tuple[str, ...] = ()              # estimate task: node labels
    methods: tuple[str, ...] = ("greedy",)
    n_sims: int = 10000
    master_seed: int = 0
    lazy: bool = False
    n_workers: int = 1
    timing: bool = False
    output: str | None = None

    def validate(self) -> None:
        if (self.graph_path is None) == (self.generator is None):
            raise ValueError("exactly one of graph_path or generator must be given")
        if self.task not in TASKS:
            raise ValueError(f"unknown task {self.task!r}; expected one of {TASKS}")
        check_model(self.model)
        check_n_sims(self.n_sims)
        check_seed(self.master_seed, "master_seed")
        scheme = self.prob_scheme.get("kind", "as-given")
        if scheme not in ("uniform", "wc", "mle", "as-given"):
            raise ValueError(f"unknown probability scheme {scheme!r}")
        if scheme == "uniform" and "p" not in self.prob_scheme:
            raise ValueError("uniform scheme needs probability 'p'")
        if scheme == "mle" and not self.prob_scheme.get("log_path"):
            raise ValueError("mle scheme needs 'log_path'")
        for m in self.methods:
            if m == "pmia":
                raise ValueError("method 'pmia' is reserved but unimplemented")
            if m not in METHODS:
                raise ValueError(f"unknown method {m!r}; expected one of {METHODS}")
        if self.task in ("mintss", "mintime"):
            if not self.etas:
                raise ValueError(f"task {self.task} needs at least one eta")
            for eta in self.etas:
                check_eta_eps(eta, self.eps)
        if self.task in ("mintime", "maxinf"):
            if not self.ks:
                raise ValueError(f"task {self.task} needs at least one k")
            if any(int(k) < 1 for k in self.ks):
                raise ValueError("every k must be >= 1")
        if self.task == "estimate" and not self.seeds:
            raise ValueError("task estimate needs explicit seeds")
        if self.n_workers < 1:
            raise ValueError("n_workers must be >= 1")

    def load_graph(self) -> DirectedGraph:
        if self.generator is not None:
            gen = dict(self.generator)
            g = generate_synthetic(gen["kind"], int(gen["n"]), gen.get("params"),
                                   int(gen.get("seed", 0)))
            if self.cost_path:
                raise ValueError("cost_path applies to file-based graphs only")
        else:
            g = load_edge_list(self.graph_path, self.default_prob,
                               cost_path=self.cost_path, symmetrize=self.symmetrize)
        scheme = self.prob_scheme.get("kind", "as-given")
        if scheme == "uniform":
            g = assign_uniform(g, float(self.prob_scheme["p"]))
        elif scheme == "wc":
            g = assign_weighted_cascade(g)
        elif scheme == "mle":
            log = load_propagation_log(self.prob_scheme["log_path"], g)
            g = estimate_probs_mle(g, log)
        for eta in self.etas:
            if eta > g.n:
                raise ValueError(f"eta={eta} exceeds the node count {g.n}")
        return g


@dataclass(frozen=True)
class ResultRow:
    method: str
    task: str
    eta: float | None
    k: int | None
    epsilon: float | None
    seed_size: int | None
    seed_cost: float | None
    time_R: int | None
    coverage: float | None
    std_err: float | None
    wall_ms: int | None
    status: str

    def as_record(self) -> list[str]:
        vals = (self.method, self.task, self.eta, self.k, self.epsilon,
                self.seed_size, self.seed_cost, self.time_R, self.coverage,
                self.std_err, self.wall_ms, self.status)
        return ["NA" if v is None else str(v) for v in vals]


@dataclass
class ExperimentResult:
    rows: list[ResultRow]

    def all_failed(self) -> bool:
        return bool(self.rows) and all(r.status == "failed" for r in self.rows)


def _sweep_points(config: ExperimentConfig):
    """Deterministic (method, eta, k) grid in CSV row order."""
    if config.task == "estimate":
        return [("given", None, None)]
    points = []
    for method in config.methods:
        if config.task == "mintss":
            points.extend((method, float(eta), None) for eta in config.etas)
        elif config.task == "mintime":
            points.extend((method, float(eta), int(k))
                          for eta in config.etas for k in config.ks)
        else:  # maxinf
            points.extend((method, None, int(k)) for k in config.ks)
    return points


def _run_point(g: DirectedGraph, config: ExperimentConfig, method: str,
               eta: float | None, k: int | None, index: int) -> ResultRow:
    seed = derive_key(config.master_seed, index)
    task = config.task
    t0 = time.perf_counter()

    def finish(seed_set, time_r, coverage, std_err, ok):
        wall = int((time.perf_counter() - t0) * 1000) if config.timing else None
        if not ok:
            return ResultRow(method, task, eta, k, config.eps if task != "maxinf" else None,
                             None, None, None, None, None, wall, "failed")
        return ResultRow(
            method, task, eta, k,
            config.eps if task in ("mintss", "mintime") else None,
            len(seed_set) if seed_set is not None else None,
            seed_set.total_cost if seed_set is not None else None,
            time_r, coverage, std_err, wall, "ok")

    if task == "estimate":
        ids = [g.node_id(lbl) for lbl in config.seeds]
        est = estimate_spread(g, config.model, ids, config.horizon,
                              n_sims=config.n_sims, master_seed=seed,
                              n_workers=1)
        return _estimate_row(g, config, method, ids, est, t0)

    if task == "mintss":
        if method == "greedy":
            oracle = MonteCarloSpreadOracle(g, config.model, None, config.n_sims, seed)
            res = greedy_mintss(oracle, eta, config.eps, costs=g.cost, lazy=config.lazy)
        else:
            spec = HeuristicSpec(method, rng_seed=seed)
            res = heuristic_mintss(g, config.model, spec, eta, config.eps,
                                   config.n_sims, seed)
            oracle = MonteCarloSpreadOracle(g, config.model, None, config.n_sims, seed)
        if not res.success:
            return finish(None, None, None, None, False)
        err = oracle.estimate(res.seeds.nodes).std_err
        return finish(res.seeds, None, res.achieved_coverage, err, True)

    if task == "mintime":
        if method == "greedy":
            res = mintime(g, config.model, k, eta, config.eps, config.n_sims,
                          seed, lazy=config.lazy)
        else:
            spec = HeuristicSpec(method, rng_seed=seed)
            res = heuristic_mintime(g, config.model, spec, k, eta, config.eps,
                                    config.n_sims, seed)
        if not res.success:
            return finish(None, None, None, None, False)
        oracle = MonteCarloSpreadOracle(g, config.model, res.time, config.n_sims, seed)
        err = oracle.estimate(res.seeds.nodes).std_err
        return finish(res.seeds, res.time, res.achieved_coverage, err, True)

    # maxinf
    oracle = MonteCarloSpreadOracle(g, config.model, None, config.n_sims, seed)
    if method == "greedy":
        seed_set = greedy_maxinf(oracle, k, costs=g.cost, lazy=config.lazy)
    else:
        spec = HeuristicSpec(method, rng_seed=seed)
        top = rank_nodes(g, spec)[:k]
        seed_set = _seedset(top, g)
    est = oracle.estimate(seed_set.nodes)
    return finish(seed_set, None, est.mean, est.std_err, True)


def _seedset(nodes, g):
    return SeedSet.of(nodes, g.cost)


def _estimate_row(g, config, method, ids, est, t0):
    wall = int((time.perf_counter() - t0) * 1000) if config.timing else None
    seed_set = _seedset(ids, g)
    return ResultRow(method, "estimate", None, None, None, len(seed_set),
                     seed_set.total_cost, config.horizon, est.mean,
                     est.std_err, wall, "ok")


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Execute every (method x sweep point); write CSV when output is set."""
    config.validate()
    g = config.load_graph()
    points = _sweep_points(config)

    def run(item):
        index, (method, eta, k) = item
        return _run_point(g, config, method, eta, k, index)

    if config.n_workers > 1:
        with ThreadPoolExecutor(max_workers=config.n_workers) as pool:
            rows = list(pool.map(run, enumerate(points)))
    else:
        rows = [run(item) for item in enumerate(points)]
    result = ExperimentResult(rows)
    if config.output:
        emit_csv(result, config.output)
    return result


def emit_csv(result: ExperimentResult, destination) -> None:
    """Write rows RFC-4180 style with the fixed column order."""
    if hasattr(destination, "write"):
        _write_csv(result, destination)
        return
    with Path(destination).open("w", encoding="utf-8", newline="") as fh:
        _write_csv(result, fh)


def _write_csv(result: ExperimentResult, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(CSV_COLUMNS)
    for row in result.rows:
        writer.writerow(row.as_record())


def csv_text(result: ExperimentResult) -> str:
    buf = io.StringIO()
    _write_csv(result, buf)
    return buf.getvalue()
