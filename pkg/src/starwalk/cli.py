"""Command-line front end.

Node labels on the command line are 1-based, so on a star the hub is node 1.

    starwalk spectrum --family star --n 5
    starwalk evolve --family star --n 100 --kind quantum --source 1 --target 1 \\
        --t-start 0 --t-stop 25.13 --steps 4000
    starwalk limit --family star --n-range 2:200
    starwalk verify --family star --n-range 2:64

Exit status: 0 on success, 1 when ``verify`` finds a failing check, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from starwalk import closedform as cf
from starwalk import figures
from starwalk.dynamics import DomainError, evolve_series, limiting_matrix
from starwalk.graph import Graph, InvalidGraphError, InvalidSizeError, laplacian, make_complete, make_star
from starwalk.io import EdgeListError, load_edge_list, write_csv, write_json
from starwalk.spectral import DEFAULT_DEGENERACY_TOL, eigendecompose, group_eigenspaces
from starwalk.verify import MAX_N, verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    family: str = "star"
    n: int | None = None
    n_range: tuple[int, int] | None = None
    edge_list: str | None = None
    source: int | None = None
    target: int | None = None
    t_start: float = 0.0
    t_stop: float = 1.0
    steps: int = 101
    kind: str = "quantum"
    method: str = "numerical"
    format: str = "csv"
    degeneracy_tol: float = DEFAULT_DEGENERACY_TOL
    output: str | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        fields = cls.__dataclass_fields__
        return cls(**{k: v for k, v in vars(args).items() if k in fields})


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B with integers, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _build_graph(cfg: RunConfig) -> Graph:
    if cfg.family == "file":
        if not cfg.edge_list:
            raise UsageError("--family file needs --edge-list PATH")
        try:
            return load_edge_list(cfg.edge_list)
        except OSError as exc:
            raise UsageError(f"cannot read edge list: {exc}") from None
    if cfg.n is None:
        raise UsageError(f"--family {cfg.family} needs --n")
    return make_star(cfg.n) if cfg.family == "star" else make_complete(cfg.n)


def _node(label: int | None, n: int, name: str) -> int:
    if label is None:
        raise UsageError(f"--{name} is required")
    if not 1 <= label <= n:
        raise UsageError(f"--{name} {label} is outside 1..{n}")
    return label - 1


def _format_eigenvalue(x: float) -> str:
    return f"{round(x, 9) + 0.0:.10g}"


def _config_dict(cfg: RunConfig) -> dict:
    d = asdict(cfg)
    d.pop("output")
    if d["n_range"] is not None:
        d["n_range"] = list(d["n_range"])
    return d


def _emit(cfg: RunConfig, out, header, rows, provenance) -> None:
    if cfg.format == "json":
        write_json(out, _config_dict(cfg), header, rows, provenance)
    else:
        write_csv(out, header, rows)


def cmd_spectrum(cfg: RunConfig, out, vectors: bool = False) -> int:
    g = _build_graph(cfg)
    d = eigendecompose(laplacian(g))
    part = group_eigenspaces(d, cfg.degeneracy_tol)
    if cfg.format == "text":
        out.write(
            ", ".join(
                f"{_format_eigenvalue(e)} (×{m})"
                for e, m in zip(part.representatives, part.multiplicities)
            )
            + "\n"
        )
        if vectors:
            for i, e in enumerate(d.eigenvalues):
                comps = " ".join(f"{x:.17g}" for x in d.eigenvectors[:, i])
                out.write(f"E={e:.17g}: {comps}\n")
        return EXIT_OK
    if vectors:
        header = ["eigenvalue"] + [f"q_{i + 1}" for i in range(g.n)]
        rows = [[float(e), *map(float, d.eigenvectors[:, i])] for i, e in enumerate(d.eigenvalues)]
    else:
        header = ["eigenvalue", "multiplicity"]
        rows = [[float(e), m] for e, m in zip(part.representatives, part.multiplicities)]
    _emit(cfg, out, header, rows, ["numerical"])
    return EXIT_OK


def _time_grid(cfg: RunConfig) -> np.ndarray:
    if cfg.steps < 1:
        raise UsageError("--steps must be >= 1")
    if cfg.t_stop < cfg.t_start:
        raise UsageError("--t-stop must be >= --t-start")
    if cfg.steps > 1 and cfg.t_stop == cfg.t_start:
        raise UsageError("a grid of several steps needs --t-stop > --t-start")
    if cfg.kind == "classical" and cfg.t_start < 0:
        raise UsageError("classical evolution is only defined for t >= 0")
    return figures.grid(cfg.t_start, cfg.t_stop, cfg.steps)


def _exact_series(cfg: RunConfig, n: int, j: int, k: int, times):
    if cfg.family == "star":
        kind = cf.classify_star_pair(n, j, k)
        if cfg.kind == "classical":
            return cf.star_classical_probability(kind, n, times), cf.CLASSICAL_PROVENANCE[kind]
        return cf.star_quantum_probability(kind, n, times), cf.QUANTUM_PROVENANCE[kind]
    if cfg.family == "complete" and cfg.kind == "quantum":
        values = cf.complete_quantum_probability(j == k, n, times)
        return values, "eq15-line1" if j == k else "eq15-line2"
    raise UsageError(
        f"no closed form for {cfg.kind} walks on family {cfg.family!r}; use --method numerical"
    )


def cmd_evolve(cfg: RunConfig, out) -> int:
    g = _build_graph(cfg)
    j = _node(cfg.source if cfg.source is not None else 1, g.n, "source")
    k = _node(cfg.target if cfg.target is not None else 1, g.n, "target")
    times = _time_grid(cfg)
    if cfg.method == "exact":
        values, provenance = _exact_series(cfg, g.n, j, k, times)
        values = np.broadcast_to(values, times.shape)
    else:
        d = eigendecompose(laplacian(g))
        values, provenance = evolve_series(d, j, k, times, cfg.kind).values, "numerical"
    rows = [[float(t), float(v)] for t, v in zip(times, values)]
    _emit(cfg, out, ["t", "value"], rows, [provenance])
    return EXIT_OK


def _exact_limit(cfg: RunConfig, n: int, j: int, k: int) -> tuple[float, str]:
    if cfg.family == "star":
        kind = cf.classify_star_pair(n, j, k)
        return cf.star_limiting_probability(kind, n), cf.LIMIT_PROVENANCE[kind]
    if cfg.family == "complete":
        return cf.complete_limiting_probability(j == k, n), "eq15-mean"
    raise UsageError("no closed form for edge-list graphs; use --method numerical")


def cmd_limit(cfg: RunConfig, out) -> int:
    if cfg.n_range is not None:
        if cfg.family != "star":
            raise UsageError("--n-range sweeps are defined for --family star only")
        lo, hi = cfg.n_range
        if lo < 2:
            raise UsageError("star sweeps start at n >= 2")
        table = figures.limit_sweep(range(lo, hi + 1), cfg.method, cfg.degeneracy_tol)
        rows = [[int(r[0]), *map(float, r[1:])] for r in table]
        provenance = (
            ["numerical"]
            if cfg.method == "numerical"
            else [cf.LIMIT_PROVENANCE[pk] for pk in figures.SWEEP_KINDS]
        )
        _emit(cfg, out, list(figures.SWEEP_HEADER), rows, provenance)
        return EXIT_OK

    g = _build_graph(cfg)
    if (cfg.source is None) != (cfg.target is None):
        raise UsageError("give both --source and --target, or neither for the full matrix")
    if cfg.source is None:
        pairs = [(j, k) for j in range(g.n) for k in range(g.n)]
    else:
        pairs = [(_node(cfg.source, g.n, "source"), _node(cfg.target, g.n, "target"))]

    rows, provenance = [], []
    if cfg.method == "exact":
        for j, k in pairs:
            value, label = _exact_limit(cfg, g.n, j, k)
            rows.append([j + 1, k + 1, float(value)])
            if label not in provenance:
                provenance.append(label)
    else:
        d = eigendecompose(laplacian(g))
        chi = limiting_matrix(d, group_eigenspaces(d, cfg.degeneracy_tol))
        rows = [[j + 1, k + 1, float(chi[k, j])] for j, k in pairs]
        provenance = ["numerical"]
    _emit(cfg, out, ["source", "target", "chi"], rows, provenance)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    if cfg.family not in ("star", "complete"):
        raise UsageError("verify supports --family star or complete")
    lo, hi = cfg.n_range if cfg.n_range is not None else (2, 64)
    if lo < 2 or hi > MAX_N:
        raise UsageError(f"--n-range must lie within 2:{MAX_N}")
    report = verify(cfg.family, range(lo, hi + 1))
    if cfg.format == "json":
        json.dump(report.to_dict(), out, indent=2)
        out.write("\n")
    else:
        out.write(report.render() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starwalk",
        description="Continuous-time quantum and classical walks on star, complete and custom graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    graph_opts = argparse.ArgumentParser(add_help=False)
    graph_opts.add_argument("--family", choices=["star", "complete", "file"], default="star")
    graph_opts.add_argument("--n", type=int, help="graph size for star/complete")
    graph_opts.add_argument("--edge-list", help="edge-list file for --family file")
    graph_opts.add_argument("--degeneracy-tol", type=float, default=DEFAULT_DEGENERACY_TOL)
    graph_opts.add_argument("--output", help="write here instead of standard output")

    pair_opts = argparse.ArgumentParser(add_help=False)
    pair_opts.add_argument("--source", type=int, help="1-based start node")
    pair_opts.add_argument("--target", type=int, help="1-based end node")
    pair_opts.add_argument("--method", choices=["numerical", "exact"], default="numerical")

    p = sub.add_parser("spectrum", parents=[graph_opts], help="eigenvalues with multiplicities")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--vectors", action="store_true", help="also list eigenvectors")

    p = sub.add_parser("evolve", parents=[graph_opts, pair_opts], help="transition probability vs time")
    p.add_argument("--kind", choices=["classical", "quantum"], default="quantum")
    p.add_argument("--t-start", type=float, default=0.0)
    p.add_argument("--t-stop", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=101, help="number of grid points")
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("limit", parents=[graph_opts, pair_opts], help="long-time average probabilities")
    p.add_argument("--n-range", type=_parse_range, help="star size sweep A:B (inclusive)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("verify", parents=[graph_opts], help="closed forms vs numerical spectra")
    p.add_argument("--n-range", type=_parse_range, help="sizes A:B (inclusive), default 2:64")
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


COMMANDS = {
    "spectrum": cmd_spectrum,
    "evolve": cmd_evolve,
    "limit": cmd_limit,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        with contextlib.ExitStack() as stack:
            out = (
                stack.enter_context(open(cfg.output, "w", newline=""))
                if cfg.output
                else sys.stdout
            )
            if args.command == "spectrum":
                return cmd_spectrum(cfg, out, vectors=args.vectors)
            return COMMANDS[args.command](cfg, out)
    except (
        UsageError,
        EdgeListError,
        InvalidGraphError,
        InvalidSizeError,
        DomainError,
        OSError,
    ) as exc:
        print(f"starwalk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
