"""Command-line front end.

Subcommands: gen, probs, estimate, maxinf, mintss, mintime, sweep.  Task
commands build an experiment config, run the sweep and write the standard
CSV.  Exit codes: 0 ok, 1 validation error, 2 I/O error, 3 all sweep points
failed.  Parallelism defaults to the SPREADOPT_THREADS environment variable.
"""

from __future__ import annotations

import os
import sys

import click

from .experiment import ExperimentConfig, emit_csv, run_experiment
from .generate import GENERATOR_KINDS, generate_synthetic
from .graph import assign_uniform, assign_weighted_cascade, load_edge_list, save_edge_list
from .proplog import estimate_probs_mle, load_propagation_log

_THREADS_ENV = "SPREADOPT_THREADS"


def _default_threads() -> int:
    return int(os.environ.get(_THREADS_ENV, "1"))


def _parse_params(pairs: tuple[str, ...]) -> dict:
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"--param expects key=value, got {pair!r}")
        key, val = pair.split("=", 1)
        try:
            params[key] = int(val)
        except ValueError:
            try:
                params[key] = float(val)
            except ValueError:
                params[key] = val
    return params


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(",") if x.strip())


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _names(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


@click.group()
def cli():
    """Seed-set optimization for influence propagation."""


_graph_options = [
    click.argument("graph", type=click.Path()),
    click.option("--default-prob", type=float, default=None,
                 help="Probability for arcs without one in the file."),
    click.option("--symmetrize", is_flag=True, help="Add both arc directions."),
    click.option("--cost-file", type=click.Path(), default=None,
                 help="TSV node<TAB>cost overrides."),
    click.option("--probs-scheme", type=click.Choice(["as-given", "uniform", "wc", "mle"]),
                 default="as-given", help="Probability assignment scheme."),
    click.option("--p", type=float, default=None, help="Probability for the uniform scheme."),
    click.option("--log", "log_path", type=click.Path(), default=None,
                 help="Propagation log for the mle scheme."),
]

_run_options = [
    click.option("--model", type=click.Choice(["ic", "lt"]), default="ic"),
    click.option("--n-sims", type=int, default=10000, show_default=True),
    click.option("--master-seed", type=int, default=0, show_default=True),
    click.option("--lazy", is_flag=True, help="CELF-style lazy candidate re-evaluation."),
    click.option("--threads", type=int, default=None,
                 help=f"Parallel sweep workers (default ${_THREADS_ENV} or 1)."),
    click.option("--timing", is_flag=True,
                 help="Record wall_ms per row (breaks byte-reproducibility)."),
    click.option("-o", "--output", type=click.Path(), default=None,
                 help="CSV destination (default: stdout)."),
]


def _add(options):
    def wrap(fn):
        for opt in reversed(options):
            fn = opt(fn)
        return fn
    return wrap


def _scheme_dict(probs_scheme, p, log_path):
    scheme = {"kind": probs_scheme}
    if p is not None:
        scheme["p"] = p
    if log_path is not None:
        scheme["log_path"] = log_path
    return scheme


def _execute(config: ExperimentConfig, output):
    result = run_experiment(config)
    if output:
        emit_csv(result, output)
    else:
        emit_csv(result, sys.stdout)
    if result.all_failed():
        sys.exit(3)


def _base_config(graph, default_prob, symmetrize, cost_file, probs_scheme, p,
                 log_path, model, n_sims, master_seed, lazy, threads, timing,
                 **task_fields) -> ExperimentConfig:
    return ExperimentConfig(
        graph_path=graph,
        default_prob=default_prob,
        symmetrize=symmetrize,
        cost_path=cost_file,
        prob_scheme=_scheme_dict(probs_scheme, p, log_path),
        model=model,
        n_sims=n_sims,
        master_seed=master_seed,
        lazy=lazy,
        n_workers=threads if threads is not None else _default_threads(),
        timing=timing,
        **task_fields,
    )


@cli.command()
@click.argument("kind", type=click.Choice(GENERATOR_KINDS))
@click.argument("n", type=int)
@click.option("--param", multiple=True, help="Generator parameter key=value (repeatable).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "--output", type=click.Path(), required=True)
def gen(kind, n, param, seed, output):
    """Generate a synthetic graph and write it as an edge list."""
    g = generate_synthetic(kind, n, _parse_params(param), seed)
    save_edge_list(g, output)
    click.echo(f"wrote {g.n} nodes / {g.n_arcs} arcs to {output}", err=True)


@cli.command()
@click.argument("graph", type=click.Path())
@click.option("--scheme", type=click.Choice(["uniform", "wc", "mle"]), required=True)
@click.option("--p", type=float, default=None, help="Probability for the uniform scheme.")
@click.option("--log", "log_path", type=click.Path(), default=None,
              help="Propagation log for the mle scheme.")
@click.option("--default-prob", type=float, default=None)
@click.option("--symmetrize", is_flag=True)
@click.option("-o", "--output", type=click.Path(), required=True)
def probs(graph, scheme, p, log_path, default_prob, symmetrize, output):
    """Reassign arc probabilities and write the new edge list."""
    g = load_edge_list(graph, default_prob, symmetrize=symmetrize)
    if scheme == "uniform":
        if p is None:
            raise ValueError("--scheme uniform needs --p")
        g = assign_uniform(g, p)
    elif scheme == "wc":
        g = assign_weighted_cascade(g)
    else:
        if log_path is None:
            raise ValueError("--scheme mle needs --log")
        g = estimate_probs_mle(g, load_propagation_log(log_path, g))
    save_edge_list(g, output)
    click.echo(f"wrote {output}", err=True)


@cli.command()
@_add(_graph_options)
@_add(_run_options)
@click.option("--seeds", required=True, help="Comma-separated node labels to activate.")
@click.option("--horizon", type=int, default=None, help="Time bound (default unbounded).")
def estimate(seeds, horizon, output, **kw):
    """Monte Carlo estimate of the spread of an explicit seed set."""
    config = _base_config(task="estimate", seeds=_names(seeds), horizon=horizon, **kw)
    _execute(config, output)


@cli.command()
@_add(_graph_options)
@_add(_run_options)
@click.option("--k", "ks", required=True, help="Comma-separated budgets.")
@click.option("--methods", default="greedy", show_default=True)
def maxinf(ks, methods, output, **kw):
    """Influence maximization: best seed set of each given size."""
    config = _base_config(task="maxinf", ks=_ints(ks), methods=_names(methods), **kw)
    _execute(config, output)


@cli.command()
@_add(_graph_options)
@_add(_run_options)
@click.option("--eta", "etas", required=True, help="Comma-separated coverage thresholds.")
@click.option("--eps", type=float, default=0.5, show_default=True)
@click.option("--methods", default="greedy", show_default=True)
def mintss(etas, eps, methods, output, **kw):
    """Minimum seed set reaching each coverage threshold."""
    config = _base_config(task="mintss", etas=_floats(etas), eps=eps,
                          methods=_names(methods), **kw)
    _execute(config, output)


@cli.command()
@_add(_graph_options)
@_add(_run_options)
@click.option("--eta", "etas", required=True, help="Comma-separated coverage thresholds.")
@click.option("--k", "ks", required=True, help="Comma-separated budgets.")
@click.option("--eps", type=float, default=0.5, show_default=True)
@click.option("--methods", default="greedy", show_default=True)
def mintime(etas, ks, eps, methods, output, **kw):
    """Minimum propagation time reaching eta with at most k (boosted) seeds."""
    config = _base_config(task="mintime", etas=_floats(etas), ks=_ints(ks),
                          eps=eps, methods=_names(methods), **kw)
    _execute(config, output)


@cli.command()
@click.option("--config", "config_path", type=click.Path(), required=True,
              help="TOML config file.")
@click.option("--task", default=None)
@click.option("--model", default=None)
@click.option("--methods", default=None)
@click.option("--eta", "etas", default=None)
@click.option("--k", "ks", default=None)
@click.option("--eps", type=float, default=None)
@click.option("--n-sims", type=int, default=None)
@click.option("--master-seed", type=int, default=None)
@click.option("--threads", type=int, default=None)
@click.option("--lazy", is_flag=True, default=None)
@click.option("--timing", is_flag=True, default=None)
@click.option("-o", "--output", type=click.Path(), default=None)
def sweep(config_path, **overrides):
    """Run a sweep described by a TOML config; flags override file values."""
    config = _load_config(config_path, overrides)
    _execute(config, config.output)


def _load_config(path: str, overrides: dict) -> ExperimentConfig:
    try:
        import tomllib
    except ImportError:  # Python 3.10
        import tomli as tomllib
    with open(path, "rb") as fh:
        data = tomllib.load(fh)

    def take(key, default=None):
        return data.pop(key, default)

    config = ExperimentConfig(
        graph_path=take("graph"),
        generator=take("generator"),
        default_prob=take("default_prob"),
        symmetrize=bool(take("symmetrize", False)),
        cost_path=take("cost_file"),
        prob_scheme=take("probs", {"kind": "as-given"}),
        model=take("model", "ic"),
        task=take("task", "mintss"),
        etas=tuple(float(x) for x in take("etas", ())),
        eps=float(take("eps", 0.5)),
        ks=tuple(int(x) for x in take("ks", ())),
        horizon=take("horizon"),
        seeds=tuple(str(s) for s in take("seeds", ())),
        methods=tuple(take("methods", ["greedy"])),
        n_sims=int(take("n_sims", 10000)),
        master_seed=int(take("master_seed", 0)),
        lazy=bool(take("lazy", False)),
        n_workers=int(take("threads", _default_threads())),
        timing=bool(take("timing", False)),
        output=take("output"),
    )
    if data:
        raise ValueError(f"unknown config keys: {sorted(data)}")

    if overrides.get("etas") is not None:
        config.etas = _floats(overrides["etas"])
    if overrides.get("ks") is not None:
        config.ks = _ints(overrides["ks"])
    if overrides.get("methods") is not None:
        config.methods = _names(overrides["methods"])
    for key, attr in (("task", "task"), ("model", "model"), ("eps", "eps"),
                      ("n_sims", "n_sims"), ("master_seed", "master_seed"),
                      ("threads", "n_workers"), ("output", "output")):
        if overrides.get(key) is not None:
            setattr(config, attr, overrides[key])
    for flag in ("lazy", "timing"):
        if overrides.get(flag):
            setattr(config, flag, True)
    return config


def main(argv=None):
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(1)
    except click.Abort:
        sys.exit(1)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except (ValueError, KeyError, NotImplementedError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
