"""Command-line front end.

Subcommands::

    compute    exact minimum distinct-rank count (default), --id-number for
               the minimum red set, --heuristic for the greedy upper bound
    verify     check a rank assignment / coloring / closed-form construction
    analyze    twin classes, lower bound and distance profile
    construct  emit a closed-form rank assignment
    sweep      family range or random batch vs expected values, as CSV

Exit codes: 0 success, 2 usage or input error, 3 search budget exhausted,
4 internal invariant violation, 5 sweep found a mismatch.

Output is deterministic by default (the sweep millis column reports 0;
pass --deterministic=false for wall-clock numbers, which breaks
byte-reproducibility; the search itself is single-lane and deterministic
either way).
Random sweep graphs use seeded Erdos-Renyi edge sampling with p = 1/2,
repaired to connectivity by adding uniformly random absent edges; the seed
is echoed in a CSV header comment so runs can be replayed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from .constructions import (
    SpecMismatchError,
    ZeroScaleError,
    NotZeroOneError,
    construct_assignment,
    expected_id_index,
)
from .families import FamilySpec, InvalidSpecError, generate, parse_family_spec
from .graphs import Graph, GraphError, all_pairs_distances, build_graph, is_connected, parse_edge_list
from .solvers import (
    BudgetExceededError,
    InternalInvariantError,
    SearchLimits,
    TooLargeError,
    greedy_upper_bound,
    id_index_exact,
    id_number_exact,
)
from .strings_codes import (
    MissingRankError,
    NoRedVertexError,
    RedWhiteColoring,
    first_collision,
    rank_assignment_from_json,
    string_table,
    code_table,
)
from .structure import (
    InvalidMultiplicitiesError,
    distance_profile,
    idi_lower_bound,
    tuplet_classes,
)


class _UsageError(Exception):
    pass


_INPUT_ERRORS = (
    GraphError,
    InvalidSpecError,
    SpecMismatchError,
    ZeroScaleError,
    NotZeroOneError,
    MissingRankError,
    NoRedVertexError,
    InvalidMultiplicitiesError,
    TooLargeError,
    _UsageError,
    ValueError,
    OSError,
)


def random_connected_graph(n: int, rng: random.Random, edge_prob: float = 0.5) -> Graph:
    """Seeded G(n, p) sample, made connected by adding absent edges."""
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                edges.add((u, v))
    g = build_graph(n, edges)
    while not is_connected(g):
        absent = sorted(
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) not in edges
        )
        edges.add(rng.choice(absent))
        g = build_graph(n, edges)
    return g


def _load_graph(args) -> tuple[Graph, FamilySpec | None]:
    if getattr(args, "family", None):
        spec = parse_family_spec(args.family)
        g, _ = generate(spec)
        return g, spec
    if getattr(args, "input", None):
        text = Path(args.input).read_text()
        return parse_edge_list(text), None
    raise _UsageError("need --family or --input")


def _limits(args) -> SearchLimits:
    if getattr(args, "budget_nodes", None):
        return SearchLimits(max_nodes=args.budget_nodes)
    return SearchLimits()


def _emit(obj, path: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_compute(args) -> int:
    g, _ = _load_graph(args)
    if args.id_number:
        res = id_number_exact(g, _limits(args))
        _emit(
            {
                "is_id_graph": res.is_id_graph,
                "id_number": res.id_number,
                "red": sorted(res.coloring.red) if res.coloring else None,
            },
            args.json,
        )
        return 0
    if args.heuristic:
        k, cert = greedy_upper_bound(g, seed=args.seed)
        _emit(
            {
                "k_upper": k,
                "partition": list(cert.partition.assignment),
                "ranks": [str(r) for r in cert.ranks.ranks],
                "strings": [[str(x) for x in row] for row in cert.strings],
                "lower_bound": cert.lower_bound,
            },
            args.json,
        )
        return 0
    cert = id_index_exact(g, _limits(args))
    _emit(cert.to_json(), args.json)
    return 0


def _cmd_verify(args) -> int:
    g, spec = _load_graph(args)
    dm = all_pairs_distances(g)
    if args.coloring:
        obj = json.loads(Path(args.coloring).read_text())
        try:
            red = frozenset(int(v) for v in obj["red"])
        except (KeyError, TypeError, ValueError):
            raise _UsageError("coloring file must look like {'red': [ids]}") from None
        codes = code_table(dm, RedWhiteColoring(g.n, red))
        pair = first_collision(codes)
        _emit(
            {
                "diameter": dm.diameter,
                "codes": [[str(x) for x in row] for row in codes],
                "id_coloring": pair is None,
                "collision": list(pair) if pair else None,
            },
            args.json,
        )
        return 0
    if args.construct:
        if spec is None:
            raise _UsageError("--construct needs --family")
        ranks = construct_assignment(spec)
    elif args.ranks:
        ranks = rank_assignment_from_json(json.loads(Path(args.ranks).read_text()))
    else:
        raise _UsageError("need one of --ranks, --coloring, --construct")
    table = string_table(dm, ranks)
    pair = first_collision(table)
    _emit(
        {
            "ranks": [str(r) for r in ranks.ranks],
            "diameter": dm.diameter,
            "strings": [[str(x) for x in row] for row in table],
            "distinguishing": pair is None,
            "collision": list(pair) if pair else None,
        },
        args.json,
    )
    return 0


def _cmd_analyze(args) -> int:
    g, _ = _load_graph(args)
    dm = all_pairs_distances(g)
    tc = tuplet_classes(g)
    profile = distance_profile(dm)
    _emit(
        {
            "n": g.n,
            "diameter": dm.diameter,
            "T": tc.max_size,
            "idi_lower_bound": max(tc.max_size, 1),
            "tuplet_classes": [
                {"members": list(c.members), "kind": c.kind} for c in tc.classes
            ],
            "distance_profile": list(profile.counts) if profile.present else None,
        },
        args.json,
    )
    return 0


def _cmd_construct(args) -> int:
    spec = parse_family_spec(args.family)
    ranks = construct_assignment(spec)
    _emit({"ranks": [str(r) for r in ranks.ranks]}, args.json)
    return 0


_SWEEPABLE = ("path", "cycle", "complete", "prism", "grid")


def _sweep_specs(args):
    if args.random:
        params = {}
        for item in args.random.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise _UsageError(f"bad --random item {item!r}")
            try:
                params[key.strip()] = int(value)
            except ValueError:
                raise _UsageError(f"bad --random value {value!r}") from None
        unknown = set(params) - {"n", "count", "seed"}
        if unknown or "n" not in params or "count" not in params:
            raise _UsageError("--random wants n=..,count=..[,seed=..]")
        if params["n"] < 1 or params["count"] < 1:
            raise _UsageError("--random n and count must be >= 1")
        seed = params.get("seed", 0)
        rng = random.Random(seed)
        out = []
        for i in range(params["count"]):
            g = random_connected_graph(params["n"], rng)
            out.append(("random", f"n={params['n']};i={i}", g, None))
        return out, seed
    if not args.family:
        raise _UsageError("need --family KIND with --from/--to, or --random")
    if args.family not in _SWEEPABLE:
        raise _UsageError(
            f"sweepable kinds are {', '.join(_SWEEPABLE)}; got {args.family!r}"
        )
    if args.from_ is None or args.to is None:
        raise _UsageError("family sweep needs --from and --to")
    if args.from_ > args.to:
        raise _UsageError("--from must not exceed --to")
    out = []
    if args.family == "grid":
        for m in range(args.from_, args.to + 1):
            for n in range(args.from_, args.to + 1):
                spec = FamilySpec("grid", (m, n))
                g, _ = generate(spec)
                out.append(("grid", f"{m}x{n}", g, spec))
    else:
        for n in range(args.from_, args.to + 1):
            spec = FamilySpec(args.family, (n,))
            g, _ = generate(spec)
            out.append((args.family, str(n), g, spec))
    return out, None


def _cmd_sweep(args) -> int:
    rows = []
    mismatch = False
    runs, seed = _sweep_specs(args)
    limits = _limits(args)
    timing = args.deterministic == "false"
    for family, params, g, spec in runs:
        started = time.perf_counter()
        cert = id_index_exact(g, limits)
        millis = int((time.perf_counter() - started) * 1000) if timing else 0
        dm = all_pairs_distances(g)
        tc = tuplet_classes(g)
        expected = expected_id_index(spec) if spec is not None else None
        if expected is None:
            match = ""
        elif expected == cert.k:
            match = "yes"
        else:
            match = "no"
            mismatch = True
        rows.append(
            [
                family,
                params,
                str(g.n),
                str(dm.diameter),
                str(tc.max_size),
                str(cert.lower_bound),
                str(cert.k),
                "" if expected is None else str(expected),
                match,
                str(cert.nodes_searched),
                str(millis),
            ]
        )
    lines = []
    if seed is not None:
        lines.append(f"# seed={seed}")
    lines.append(
        "family,params,n,diameter,T,lower_bound,idi,expected,match,nodes_searched,millis"
    )
    lines.extend(",".join(row) for row in rows)
    text = "\n".join(lines) + "\n"
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    if mismatch:
        print("sweep: exact value disagreed with expected value", file=sys.stderr)
        return 5
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idindex",
        description="Distance-based vertex identification: exact solvers, "
        "constructions and diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_source(p):
        p.add_argument("--family", help="family spec, e.g. path:7 or grid:3x4")
        p.add_argument("--input", help="edge-list file (u v per line, # comments)")
        p.add_argument(
            "--format",
            choices=["edgelist"],
            default="edgelist",
            help="input file format (only edgelist)",
        )
        p.add_argument("--json", help="write the JSON report here instead of stdout")
        p.add_argument(
            "--deterministic",
            nargs="?",
            const="true",
            default="true",
            choices=["true", "false"],
            help="reproducible output (default true); false fills wall-clock fields",
        )

    p = sub.add_parser("compute", help="exact search (or --id-number / --heuristic)")
    add_graph_source(p)
    p.add_argument("--id-number", action="store_true", help="minimum red-set search")
    p.add_argument("--heuristic", action="store_true", help="greedy upper bound")
    p.add_argument("--seed", type=int, default=0, help="seed for --heuristic splits")
    p.add_argument("--budget-nodes", type=int, help="partition-search node budget")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="check an assignment or coloring")
    add_graph_source(p)
    p.add_argument("--ranks", help="rank assignment JSON file")
    p.add_argument("--coloring", help="coloring JSON file, {'red': [ids]}")
    p.add_argument(
        "--construct",
        action="store_true",
        help="verify the closed-form construction for --family",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("analyze", help="twin classes, bounds, distance profile")
    add_graph_source(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("construct", help="emit a closed-form rank assignment")
    p.add_argument("--family", required=True)
    p.add_argument("--json", help="write the JSON report here instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("sweep", help="family range or random batch, CSV output")
    p.add_argument("--family", help=f"one of: {', '.join(_SWEEPABLE)}")
    p.add_argument("--from", dest="from_", type=int, help="first parameter value")
    p.add_argument("--to", type=int, help="last parameter value")
    p.add_argument("--random", help="random batch: n=..,count=..[,seed=..]")
    p.add_argument("--csv", help="write the CSV here instead of stdout")
    p.add_argument("--budget-nodes", type=int, help="partition-search node budget")
    p.add_argument(
        "--deterministic",
        nargs="?",
        const="true",
        default="true",
        choices=["true", "false"],
        help="reproducible CSV with millis=0 (default true); false records "
        "wall-clock millis",
    )
    p.set_defaults(func=_cmd_sweep)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors itself
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 4
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
