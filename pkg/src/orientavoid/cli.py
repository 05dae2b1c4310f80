"""Command-line interface.

Exit codes: 0 = SAT / verified, 1 = UNSAT / verification failed,
2 = GIVEUP, 3 = input or usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import generators
from .errors import OrientavoidError
from .instances import Instance, emit_instance, load_instance, parse_decomposition_file
from .lists import (
    ForbiddenLists,
    IntervalProfile,
    end_interval_holes,
    lasso_hypothesis,
    single_home_hypothesis,
    strict_half_bound,
    weak_half_bound,
)
from .oracle import decide, verify
from .solver import GIVEUP, SAT, UNSAT, solve

EXIT_SAT = 0
EXIT_UNSAT = 1
EXIT_GIVEUP = 2
EXIT_INPUT = 3

_STATUS_EXIT = {SAT: EXIT_SAT, UNSAT: EXIT_UNSAT, GIVEUP: EXIT_GIVEUP}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors map to exit code 3
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orientavoid", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--decomp", help="file with two lines of edge indices")
    p.add_argument("--oracle-budget", type=int, default=24)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check the orientation stored in an instance file")
    p.add_argument("instance")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="exhaustively count avoiding orientations")
    p.add_argument("instance")
    p.add_argument("--budget", type=int, default=24)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("profile", help="print hole/home structure and hypothesis checks")
    p.add_argument("instance")

    p = sub.add_parser("gen", help="generate an instance file (graph only, empty lists)")
    p.add_argument(
        "family",
        choices=["regular", "clique", "two-degenerate", "k6-minus-matching", "bipartite",
                 "multigraph"],
    )
    p.add_argument("params", nargs="*", help="family parameters, e.g. 'n d' for regular")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write here instead of stdout")

    p = sub.add_parser("experiment", help="run a sweep described by a JSON config")
    p.add_argument("config")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--json", action="store_true", help="emit JSON lines instead of CSV")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return _dispatch(args)
    except (OrientavoidError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _dispatch(args) -> int:
    handler = {
        "solve": _cmd_solve,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
        "profile": _cmd_profile,
        "gen": _cmd_gen,
        "experiment": _cmd_experiment,
    }[args.command]
    return handler(args)


def _cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    decomposition = inst.decomposition
    if args.decomp:
        with open(args.decomp, encoding="utf-8") as fh:
            decomposition = parse_decomposition_file(fh.read(), inst.graph.m)
    report = solve(
        inst.graph,
        inst.lists,
        decomposition=decomposition,
        oracle_budget=args.oracle_budget,
        restarts=args.restarts,
        seed=args.seed,
    )
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"status: {report.status}")
        print(f"methods: {' -> '.join(report.methods)}")
        if report.guarantee:
            print(f"guarantee: {report.guarantee}")
        if report.orientation is not None:
            print("orientation:")
            for e in range(inst.graph.m):
                print(f"  {report.orientation.tail(e)} {report.orientation.head(e)}")
        if report.certificate is not None:
            c = report.certificate
            print(
                f"certificate: {c.kind} on vertices {sorted(c.vertices)} "
                f"(bound sum {c.bound_sum}, inside {c.inside_edges}, boundary {c.boundary_edges})"
            )
    return _STATUS_EXIT[report.status]


def _cmd_verify(args) -> int:
    inst = load_instance(args.instance)
    if inst.orientation is None:
        print("error: instance file carries no orientation section", file=sys.stderr)
        return EXIT_INPUT
    ok, violations = verify(inst.graph, inst.orientation, inst.lists)
    if args.json:
        print(json.dumps({"schema": 1, "ok": ok, "violations": violations}))
    elif ok:
        print("ok: orientation avoids every forbidden out-degree")
    else:
        for v, x in violations:
            print(f"violation: vertex {v} has forbidden out-degree {x}")
    return EXIT_SAT if ok else EXIT_UNSAT


def _cmd_oracle(args) -> int:
    inst = load_instance(args.instance)
    result = decide(inst.graph, inst.lists, budget=args.budget)
    if args.json:
        print(
            json.dumps(
                {
                    "schema": 1,
                    "status": result.status,
                    "solution_count": result.solution_count,
                    "enumerated_count": result.enumerated_count,
                }
            )
        )
    else:
        print(
            f"{result.status}: {result.solution_count} avoiding orientations "
            f"out of {result.enumerated_count}"
        )
    return EXIT_SAT if result.status == "SAT" else EXIT_UNSAT


def _cmd_profile(args) -> int:
    inst = load_instance(args.instance)
    profile = IntervalProfile(inst.graph, inst.lists)
    for v in range(inst.graph.n):
        d = inst.graph.degree[v]
        parts = []
        for iv in profile.intervals(v):
            tag = "hole" if iv.hole else "home"
            parts.append(f"{tag}[{iv.lo}..{iv.hi}]")
        print(f"vertex {v}: degree {d}, F={sorted(inst.lists[v])}")
        print(f"  intervals: {' '.join(parts)}")
        print(
            f"  above={sorted(profile.above(v))} below={sorted(profile.below(v))} "
            f"far={sorted(profile.far(v))}"
        )
    print(f"strict half bound: {strict_half_bound(inst.graph, inst.lists)}")
    print(f"weak half bound: {weak_half_bound(inst.graph, inst.lists)}")
    print(f"lasso hypothesis: {lasso_hypothesis(profile)}")
    print(f"holes only at range ends: {end_interval_holes(profile)}")
    print(f"single home hypothesis: {single_home_hypothesis(profile)}")
    return EXIT_SAT


def _gen_graph(family: str, params: list[str], seed: int):
    vals = [float(x) if "." in x else int(x) for x in params]
    if family == "regular":
        n, d = vals
        return generators.random_regular(int(n), int(d), seed)
    if family == "clique":
        (n,) = vals
        return generators.clique(int(n))
    if family == "two-degenerate":
        (n,) = vals
        return generators.random_two_degenerate(int(n), seed)
    if family == "k6-minus-matching":
        (size,) = vals
        return generators.k6_minus_matching(int(size))
    if family == "bipartite":
        a, b, p = vals
        return generators.random_bipartite(int(a), int(b), float(p), seed)
    if family == "multigraph":
        n, m = vals
        return generators.random_multigraph(int(n), int(m), seed)
    raise ValueError(f"unknown family {family!r}")


def _cmd_gen(args) -> int:
    try:
        graph = _gen_graph(args.family, args.params, args.seed)
    except (TypeError, ValueError) as exc:
        print(f"error: bad parameters for {args.family}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = emit_instance(Instance(graph, ForbiddenLists.empty(graph.n)))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_SAT


_LIST_SCHEMES = {
    "empty": lambda g, rng: ForbiddenLists.empty(g.n),
    "arbitrary": lambda g, rng: generators.random_lists(g, rng),
    "strict_half": lambda g, rng: generators.random_lists_strict_half(g, rng),
    "end_holes": lambda g, rng: generators.random_lists_end_holes(g, rng),
    "lasso": lambda g, rng: generators.random_lists_lasso(g, rng),
}


def _make_lists(graph, scheme_cfg, rng):
    scheme = scheme_cfg.get("scheme", "empty")
    if scheme == "uniform":
        return ForbiddenLists.uniform(graph.n, scheme_cfg.get("values", []))
    if scheme in _LIST_SCHEMES:
        return _LIST_SCHEMES[scheme](graph, rng)
    raise ValueError(f"unknown list scheme {scheme!r}")


def _cmd_experiment(args) -> int:
    import random

    with open(args.config, encoding="utf-8") as fh:
        config = json.load(fh)
    seed = config.get("seed", 0)
    budget = config.get("oracle_budget", 24)
    restarts = config.get("restarts", 20)
    rows = []
    for run_no, run in enumerate(config.get("runs", [])):
        family = run["family"]
        params = run.get("params", {})
        count = run.get("count", 1)
        scheme_cfg = run.get("lists", {"scheme": "empty"})
        for i in range(count):
            rng = random.Random((seed, run_no, i).__hash__())
            graph = _experiment_graph(family, params, rng)
            lists = _make_lists(graph, scheme_cfg, rng)
            start = time.perf_counter()
            report = solve(graph, lists, oracle_budget=budget, restarts=restarts,
                           seed=seed + i)
            seconds = time.perf_counter() - start
            rows.append(
                {
                    "run": run_no,
                    "instance": i,
                    "family": family,
                    "n": graph.n,
                    "m": graph.m,
                    "scheme": scheme_cfg.get("scheme", "empty"),
                    "status": report.status,
                    "guarantee": report.guarantee or "",
                    "methods": "+".join(report.methods),
                    "moves": report.stats.get("moves", 0),
                    "seconds": round(seconds, 6),
                }
            )
    if args.json:
        text = "\n".join(json.dumps(row) for row in rows) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()) if rows else ["run"])
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_SAT


def _experiment_graph(family: str, params: dict, rng):
    if family == "regular":
        return generators.random_regular(params["n"], params["d"], rng)
    if family == "clique":
        return generators.clique(params["n"])
    if family == "two_degenerate":
        return generators.random_two_degenerate(params["n"], rng)
    if family == "k6_minus_matching":
        return generators.k6_minus_matching(params.get("size", 3))
    if family == "bipartite":
        return generators.random_bipartite(params["a"], params["b"], params.get("p", 0.5), rng)
    if family == "multigraph":
        return generators.random_multigraph(params["n"], params["m"], rng)
    raise ValueError(f"unknown family {family!r}")


if __name__ == "__main__":
    sys.exit(main())
