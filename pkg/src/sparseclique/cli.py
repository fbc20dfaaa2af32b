"""Command-line front end: solve, bench, stats, convert, gen-rmat, communities.

Exit codes are stable: 0 success, 2 usage errors (click), 3 parse/format
errors, 4 time-limit hit (result JSON is still printed), 5 contract
violations such as the brute-force size cap. Environment variables
SPARSECLIQUE_TIME_LIMIT and SPARSECLIQUE_THREADS override the defaults for
`solve` and `bench`.
"""

from __future__ import annotations

import csv
import json
import os
import sys
from pathlib import Path

import click

from . import io as gio
from .baseline import brute_force, max_clique_cp
from .community import InteractionRecords, build_cooccurrence_graph, detect_communities, threshold_filter
from .errors import FormatError
from .exact import CliqueResult, Ordering, PruneStats, SolverConfig, max_clique
from .graph import Graph
from .heuristic import SelectionPolicy, max_clique_heuristic
from .rmat import family_params

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_TIMEOUT = 4
EXIT_CONTRACT = 5

TIME_LIMIT_ENV = "SPARSECLIQUE_TIME_LIMIT"
THREADS_ENV = "SPARSECLIQUE_THREADS"

BENCH_CSV_HEADER = [
    "graph",
    "n",
    "m",
    "max_degree",
    "algorithm",
    "size",
    "elapsed_s",
    "p1",
    "p2",
    "p3",
    "p4",
    "p5",
    "exact",
    "status",
    "policy",
    "seed",
    "error",
]

ALGORITHMS = ("exact", "heuristic", "cp", "brute")


def _env_float(name: str) -> float | None:
    raw = os.environ.get(name)
    return float(raw) if raw else None


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    return int(raw) if raw else None


def _load(path: str, fmt: str, base: int) -> Graph:
    try:
        return gio.load_graph(path, fmt=fmt, base=base)
    except FileNotFoundError:
        raise click.UsageError(f"cannot read {path!r}: no such file")
    except FormatError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_FORMAT)


def _run_algo(
    g: Graph,
    algo: str,
    lb: int,
    ordering: str,
    threads: int,
    time_limit: float | None,
    policy: str,
    seed: int,
) -> CliqueResult:
    if algo == "exact":
        cfg = SolverConfig(lb=lb, ordering=Ordering(ordering), threads=threads, time_limit=time_limit)
        return max_clique(g, cfg)
    if algo == "cp":
        return max_clique_cp(g, time_limit=time_limit)
    if algo == "heuristic":
        pol = SelectionPolicy(kind=policy, seed=seed)
        return max_clique_heuristic(g, pol, threads=threads)
    size = brute_force(g)
    return CliqueResult(size=size, witness=None, stats=PruneStats(), algorithm="brute")


@click.group()
def cli():
    """Maximum-clique toolkit for large sparse graphs."""


@cli.command("solve")
@click.argument("input_path", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(("auto",) + gio.FORMATS), default="auto")
@click.option("--base", type=click.IntRange(0, 1), default=0, help="Edge-list id base.")
@click.option("--algo", type=click.Choice(ALGORITHMS), default="exact")
@click.option("--lb", type=int, default=0, help="Initial clique-size lower bound (exact only).")
@click.option("--order", type=click.Choice([o.value for o in Ordering]), default="natural")
@click.option("--threads", type=int, default=None)
@click.option("--time-limit", type=float, default=None, help="Wall-clock limit in seconds.")
@click.option("--policy", type=click.Choice(("maxdeg", "random")), default=None, help="Heuristic selection policy.")
@click.option("--seed", type=int, default=0, help="Seed for the random selection policy.")
def solve(input_path, fmt, base, algo, lb, order, threads, time_limit, policy, seed):
    """Solve one graph and print the result as JSON."""
    if policy is not None and algo != "heuristic":
        raise click.UsageError("--policy applies only to --algo heuristic")
    if seed and (policy or "maxdeg") != "random":
        raise click.UsageError("--seed applies only to --policy random")
    if lb and algo != "exact":
        raise click.UsageError("--lb applies only to --algo exact")
    threads = threads if threads is not None else (_env_int(THREADS_ENV) or 1)
    time_limit = time_limit if time_limit is not None else _env_float(TIME_LIMIT_ENV)

    g = _load(input_path, fmt, base)
    try:
        result = _run_algo(g, algo, lb, order, threads, time_limit, policy or "maxdeg", seed)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CONTRACT)
    payload = result.to_json_dict()
    payload["graph"] = str(input_path)
    payload["n"] = g.n
    payload["m"] = g.m
    click.echo(json.dumps(payload))
    if not result.exact:
        sys.exit(EXIT_TIMEOUT)


def _bench_row(entry: dict, defaults: dict) -> dict:
    row = {key: "" for key in BENCH_CSV_HEADER}
    name = entry.get("name") or entry.get("path") or "?"
    algo = entry.get("algo", "exact")
    row["graph"] = name
    row["algorithm"] = algo
    path = entry.get("path")
    if not path:
        row["status"] = "error"
        row["error"] = "missing 'path'"
        return row
    if algo not in ALGORITHMS:
        row["status"] = "error"
        row["error"] = f"unknown algo {algo!r}"
        return row
    if not Path(path).is_file():
        row["status"] = "missing"
        row["error"] = f"no such file: {path}"
        return row
    try:
        g = gio.load_graph(path, fmt=entry.get("format", "auto"), base=int(entry.get("base", 0)))
    except FormatError as exc:
        row["status"] = "error"
        row["error"] = str(exc)
        return row
    row["n"], row["m"], row["max_degree"] = g.n, g.m, g.max_degree
    try:
        result = _run_algo(
            g,
            algo,
            int(entry.get("lb", 0)),
            entry.get("ordering", "natural"),
            int(entry.get("threads", defaults["threads"])),
            entry.get("time_limit", defaults["time_limit"]),
            entry.get("policy", "maxdeg"),
            int(entry.get("seed", 0)),
        )
    except ValueError as exc:
        row["status"] = "error"
        row["error"] = str(exc)
        return row
    stats = result.stats.as_dict()
    row.update(
        size=result.size,
        elapsed_s=f"{result.elapsed:.6f}",
        exact=result.exact,
        status="ok" if result.exact else "timeout",
        **stats,
    )
    if result.policy is not None:
        row["policy"] = result.policy
        row["seed"] = "" if result.seed is None else result.seed
    return row


@cli.command("bench")
@click.argument("manifest_path", type=click.Path())
@click.option("--out", "out_path", type=click.Path(), required=True)
def bench(manifest_path, out_path):
    """Run every manifest entry and write one CSV row per run.

    The manifest is JSON: {"entries": [{"path": ..., "algo": ...,
    optional name/format/base/lb/ordering/threads/time_limit/policy/seed}]}.
    Failures become rows with an error status; the harness keeps going.
    Entries run sequentially so timings do not contend.
    """
    try:
        with open(manifest_path, "r", encoding="utf-8") as handle:
            manifest = json.load(handle)
    except FileNotFoundError:
        raise click.UsageError(f"cannot read {manifest_path!r}: no such file")
    except json.JSONDecodeError as exc:
        click.echo(f"error: manifest is not valid JSON: {exc}", err=True)
        sys.exit(EXIT_FORMAT)
    entries = manifest if isinstance(manifest, list) else manifest.get("entries", [])
    defaults = {
        "threads": _env_int(THREADS_ENV) or 1,
        "time_limit": _env_float(TIME_LIMIT_ENV),
    }
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=BENCH_CSV_HEADER)
        writer.writeheader()
        for entry in entries:
            writer.writerow(_bench_row(entry, defaults))
    click.echo(f"wrote {len(entries)} rows to {out_path}")


@cli.command("stats")
@click.argument("input_path", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(("auto",) + gio.FORMATS), default="auto")
@click.option("--base", type=click.IntRange(0, 1), default=0)
def stats(input_path, fmt, base):
    """Print structural properties of a graph as JSON."""
    g = _load(input_path, fmt, base)
    degrees = g.degrees()
    histogram: dict[int, int] = {}
    for d in degrees:
        histogram[int(d)] = histogram.get(int(d), 0) + 1
    payload = {
        "graph": str(input_path),
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree,
        "degree_histogram": sorted(histogram.items()),
    }
    click.echo(json.dumps(payload))


@cli.command("convert")
@click.argument("input_path", type=click.Path())
@click.argument("output_path", type=click.Path())
@click.option("--from", "in_fmt", type=click.Choice(("auto",) + gio.FORMATS), default="auto")
@click.option("--to", "out_fmt", type=click.Choice(("auto",) + gio.FORMATS), default="auto")
@click.option("--base", type=click.IntRange(0, 1), default=0)
def convert(input_path, output_path, in_fmt, out_fmt, base):
    """Convert between graph formats (normalization applied, lossless)."""
    g = _load(input_path, in_fmt, base)
    gio.save_graph(g, output_path, fmt=out_fmt)
    click.echo(f"wrote {output_path} (n={g.n}, m={g.m})")


@cli.command("gen-rmat")
@click.option("--family", type=click.Choice(("er", "sd1", "sd2")), required=True)
@click.option("--scale", type=click.IntRange(min=1), required=True)
@click.option("--seed", type=int, default=0)
@click.option("--edge-factor", type=click.IntRange(min=1), default=8)
@click.option("--out", "out_path", type=click.Path(), required=True)
@click.option("--format", "fmt", type=click.Choice(("auto",) + gio.FORMATS), default="auto")
def gen_rmat(family, scale, seed, edge_factor, out_path, fmt):
    """Generate a synthetic graph and write it to a file."""
    from .rmat import RmatParams, generate_rmat

    params = family_params(family, scale, seed)
    if edge_factor != params.edge_factor:
        params = RmatParams(params.a, params.b, params.c, params.d, scale, edge_factor, seed)
    g = generate_rmat(params)
    gio.save_graph(g, out_path, fmt=fmt)
    click.echo(f"wrote {out_path} (n={g.n}, m={g.m}, max_degree={g.max_degree})")


@cli.command("communities")
@click.option("--input", "input_path", type=click.Path(), required=True, help="Two-column (wall user) records.")
@click.option("--threshold", type=click.FloatRange(0.0, 1.0), required=True)
@click.option("--out", "out_path", type=click.Path(), required=True)
@click.option("--threads", type=int, default=1)
def communities_cmd(input_path, threshold, out_path, threads):
    """Detect overlapping communities among walls sharing commenters."""
    try:
        records = InteractionRecords.from_file(input_path)
    except FileNotFoundError:
        raise click.UsageError(f"cannot read {input_path!r}: no such file")
    try:
        weighted = build_cooccurrence_graph(records)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CONTRACT)
    filtered = threshold_filter(weighted, threshold)
    communities = detect_communities(filtered, threads=threads)
    payload = {
        "threshold": threshold,
        "walls": weighted.labels,
        "communities": sorted(sorted(c) for c in communities),
    }
    with open(out_path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2)
    click.echo(f"wrote {out_path} ({len(communities)} communities over {len(weighted.labels)} walls)")


def main() -> None:  # pragma: no cover - thin wrapper
    cli()


if __name__ == "__main__":  # pragma: no cover
    main()
