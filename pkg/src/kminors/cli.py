"""Command-line interface: ``kminors <command> ...``.

Exit codes: ``find`` returns 0 (found), 1 (proven absent) or 2 (timeout);
``check`` and ``game verify`` return 0 on pass and 1 on fail; reduction
commands return 0 when something was found and 1 otherwise.  Usage errors
(bad arguments, unparseable input, unknown suite) exit with 64.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .constructions import FAMILIES, FamilySpec
from .errors import GraphInputError, GuardExceeded, PreconditionError
from .game import solve_game, six_cluster_around, verify_game_lemma
from .graph import Bipartition, Graph
from .io import cluster_to_dict, graph_to_dict, load_graph, save_graph, to_dot
from .reduction import (
    build_cover_graph,
    chromatic_number,
    feasible_partition,
    find_attachment_system,
    find_kpqr,
)
from .search import SearchBudget, find_t_cluster
from .suites import RANDOM_SUITES, SUITES, run_suite

log = logging.getLogger("kminors")

USAGE_ERROR = 64
VERDICTS = ("found", "absent", "timeout", "not-applicable", "pass", "fail")


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    verdict: str
    n: int | None = None
    m: int | None = None
    sides: list[int] | None = None
    certificate: str | None = None
    seconds: float = 0.0
    nodes: int | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")

    def describe(self, g: Graph, bip: Bipartition | None) -> "RunReport":
        self.n, self.m = g.num_vertices, g.num_edges
        if bip is not None:
            self.sides = [len(bip.side_a), len(bip.side_b)]
        return self

    def text(self) -> str:
        parts = [f"{self.verdict}"]
        if self.n is not None:
            parts.append(f"n={self.n} m={self.m}")
        if self.sides:
            parts.append(f"|A|={self.sides[0]} |B|={self.sides[1]}")
        if self.nodes is not None:
            parts.append(f"nodes={self.nodes}")
        parts.append(f"{self.seconds:.3f}s")
        if self.certificate:
            parts.append(f"certificate={self.certificate}")
        return " ".join(parts)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _kv(items: list[str]) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"expected key=value, got {item!r}")
        try:
            out[key] = int(value)
        except ValueError:
            try:
                out[key] = float(value)
            except ValueError:
                out[key] = {"true": True, "false": False}.get(value.lower(), value)
    return out


def _ids(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated ids, got {text!r}") from None


def _blocks(text: str) -> list[list[int]]:
    return [_ids(b) for b in text.split(";") if b.strip()]


def _load(path) -> tuple[Graph, Bipartition | None]:
    try:
        return load_graph(path)
    except (OSError, json.JSONDecodeError, GraphInputError) as e:
        raise UsageError(f"cannot read graph {path}: {e}") from None


def _need_bip(g, bip, path) -> Bipartition:
    if bip is None:
        raise UsageError(f"{path} has no bipartition")
    return bip


def _write_json(path, data) -> str:
    Path(path).write_text(json.dumps(data, indent=1) + "\n")
    return str(path)


# -- commands -----------------------------------------------------------------


def cmd_gen(args) -> tuple[RunReport, int]:
    params = _kv(args.params + args.extra)
    if args.seed is not None:
        params["seed"] = args.seed
    try:
        spec = FamilySpec(args.family, params)
        base = None
        if args.family == "amplifier" and args.base:
            g0, b0 = _load(args.base)
            base = (g0, _need_bip(g0, b0, args.base))
        g, bip = spec.generate(base)
    except (GraphInputError, PreconditionError, KeyError) as e:
        raise UsageError(str(e)) from None
    report = RunReport("gen", "pass").describe(g, bip)
    report.details["degree_histogram"] = {str(k): v for k, v in g.degree_histogram().items()}
    if args.out:
        save_graph(args.out, g, bip)
        report.certificate = args.out
    else:
        report.details["graph"] = graph_to_dict(g, bip)
    if args.dot:
        Path(args.dot).write_text(to_dot(g, bip))
    return report, 0


def cmd_find(args) -> tuple[RunReport, int]:
    g, bip = _load(args.input)
    try:
        budget = SearchBudget(node_limit=args.node_limit, time_limit=args.time_limit)
    except ValueError as e:
        raise UsageError(str(e)) from None
    res = find_t_cluster(g, args.t, budget)
    report = RunReport("find", res.status, nodes=res.nodes, seconds=res.elapsed).describe(g, bip)
    if res.found:
        cert = cluster_to_dict(res.cluster)
        if args.out:
            report.certificate = _write_json(args.out, cert)
        else:
            report.details["cluster"] = cert
    return report, {"found": 0, "absent": 1, "timeout": 2}[res.status]


def cmd_check(args) -> tuple[RunReport, int]:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}")
    params = _kv(args.params)
    if args.seed is not None:
        params["seed"] = args.seed
    if args.suite in RANDOM_SUITES and "seed" not in params:
        raise UsageError(f"suite {args.suite} is random; pass --seed")
    if args.workers > 1:
        params["workers"] = args.workers
    t0 = time.monotonic()
    try:
        result = run_suite(args.suite, **params)
    except TypeError as e:
        raise UsageError(f"bad parameters for {args.suite}: {e}") from None
    report = RunReport("check", "pass" if result.passed else "fail", seconds=time.monotonic() - t0)
    report.details = {"suite": args.suite, "stats": result.stats, "log": result.log}
    if not args.json:
        for line in result.log:
            print(line)
    return report, 0 if result.passed else 1


def cmd_game(args) -> tuple[RunReport, int]:
    t0 = time.monotonic()
    if args.action == "verify":
        try:
            rep = verify_game_lemma(args.kmax, args.workers)
        except PreconditionError as e:
            raise UsageError(str(e)) from None
        report = RunReport("game verify", "pass", seconds=time.monotonic() - t0)
        report.details = {"counts": rep.counts, "total": rep.total, "max_tried": rep.max_tried}
        return report, 0
    if not args.triangles:
        raise UsageError("game solve needs --triangles, e.g. '0,1,2;0,3,4'")
    try:
        sol = solve_game(_blocks(args.triangles))
    except GraphInputError as e:
        raise UsageError(str(e)) from None
    report = RunReport("game solve", "found", seconds=time.monotonic() - t0)
    report.details = sol.to_dict()
    return report, 0


def cmd_six(args) -> tuple[RunReport, int]:
    g, bip = _load(args.input)
    bip = _need_bip(g, bip, args.input)
    t0 = time.monotonic()
    try:
        c = six_cluster_around(g, bip, args.a)
    except (GraphInputError, PreconditionError) as e:
        raise UsageError(str(e)) from None
    report = RunReport("six", "found" if c else "not-applicable", seconds=time.monotonic() - t0).describe(g, bip)
    if c:
        report.details["cluster"] = cluster_to_dict(c)
    return report, 0 if c else 1


def cmd_kpqr(args) -> tuple[RunReport, int]:
    g, bip = _load(args.input)
    bip = _need_bip(g, bip, args.input)
    t0 = time.monotonic()
    try:
        emb = find_kpqr(g, bip, args.p, args.q, args.r)
    except PreconditionError as e:
        raise UsageError(str(e)) from None
    report = RunReport("kpqr", "found" if emb else "absent", seconds=time.monotonic() - t0).describe(g, bip)
    if emb:
        report.details["embedding"] = asdict(emb)
    return report, 0 if emb else 1


def cmd_cover(args) -> tuple[RunReport, int]:
    g, bip = _load(args.input)
    bip = _need_bip(g, bip, args.input)
    try:
        cover = build_cover_graph(g, bip, _ids(args.a), _ids(args.b))
    except GraphInputError as e:
        raise UsageError(str(e)) from None
    report = RunReport("cover", "pass").describe(g, bip)
    report.details = {
        "base": list(cover.base),
        "excluded": list(cover.excluded),
        "edges": [list(e) for e in cover.edges],
        "witness": [[u, v, w] for (u, v), w in cover.witness.items()],
    }
    return report, 0


def cmd_feasible(args) -> tuple[RunReport, int]:
    g, bip = _load(args.input)
    bip = _need_bip(g, bip, args.input)
    blocks = _blocks(args.blocks)
    try:
        xs = feasible_partition(g, bip, _ids(args.a), [b for y in blocks for b in y], blocks)
    except (GraphInputError, PreconditionError) as e:
        raise UsageError(str(e)) from None
    report = RunReport("feasible", "found" if xs is not None else "absent").describe(g, bip)
    if xs is not None:
        report.details["assignment"] = [sorted(x) for x in xs]
    return report, 0 if xs is not None else 1


def cmd_attach(args) -> tuple[RunReport, int]:
    g, _ = _load(args.input)
    try:
        sets = find_attachment_system(g, _ids(args.x), args.k)
    except (GraphInputError, PreconditionError, GuardExceeded) as e:
        raise UsageError(str(e)) from None
    report = RunReport("attach", "found" if sets else "absent").describe(g, None)
    if sets:
        report.details["sets"] = [sorted(s) for s in sets]
    return report, 0 if sets else 1


def cmd_chi(args) -> tuple[RunReport, int]:
    g, _ = _load(args.input)
    try:
        chi = chromatic_number(g)
    except GuardExceeded as e:
        raise UsageError(str(e)) from None
    report = RunReport("chi", "pass").describe(g, None)
    report.details["chromatic_number"] = chi
    return report, 0


def cmd_dot(args) -> tuple[RunReport, int]:
    g, bip = _load(args.input)
    text = to_dot(g, bip)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return RunReport("dot", "pass").describe(g, bip), 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the run report as JSON")
    common.add_argument("--workers", type=int, default=1, help="parallel workers (default 1)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="kminors", description="Search and verify complete-graph minors.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", parents=[common], help="generate a graph family")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("extra", nargs="*", metavar="key=value")
    s.add_argument("--params", nargs="*", default=[], metavar="key=value")
    s.add_argument("--seed", type=int)
    s.add_argument("--base", help="base graph JSON for the amplifier family")
    s.add_argument("--out")
    s.add_argument("--dot", help="also write DOT to this path")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("find", parents=[common], help="search for a K_t minor")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--time-limit", type=float)
    s.add_argument("--node-limit", type=int)
    s.add_argument("--out", help="certificate JSON path")
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("check", parents=[common], help="run a named verification suite")
    s.add_argument("suite", help=", ".join(SUITES))
    s.add_argument("params", nargs="*", metavar="key=value")
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("game", parents=[common], help="the triangle-path game on K6")
    s.add_argument("action", choices=("verify", "solve"))
    s.add_argument("--kmax", type=int, default=4)
    s.add_argument("--triangles", help="e.g. '0,1,2;0,3,4'")
    s.set_defaults(func=cmd_game)

    s = sub.add_parser("six", parents=[common], help="6-cluster around a degree-6 A-vertex")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--a", type=int, required=True)
    s.set_defaults(func=cmd_six)

    s = sub.add_parser("kpqr", parents=[common], help="find a K(p,q,r) subgraph")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("r", type=int)
    s.set_defaults(func=cmd_kpqr)

    s = sub.add_parser("cover", parents=[common], help="build a cover graph")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--a", default="", help="excluded A-vertices, comma-separated")
    s.add_argument("--b", required=True, help="base B-vertices, comma-separated")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("feasible", parents=[common], help="feasibility of a partition of B-vertices")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--a", required=True, help="available A-vertices, comma-separated")
    s.add_argument("--blocks", required=True, help="blocks separated by ';', e.g. '4,5;6'")
    s.set_defaults(func=cmd_feasible)

    s = sub.add_parser("attach", parents=[common], help="attachment system of a vertex set")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--x", required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_attach)

    s = sub.add_parser("chi", parents=[common], help="chromatic number (up to 10 vertices)")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("dot", parents=[common], help="export DOT")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    try:
        report, code = args.func(args)
    except UsageError as e:
        print(f"kminors: error: {e}", file=sys.stderr)
        return USAGE_ERROR
    report.command = " ".join(["kminors"] + (argv if argv is not None else sys.argv[1:]))
    if args.json:
        print(json.dumps(asdict(report)))
    elif args.command != "dot":
        print(report.text())
        if report.details and args.command not in ("check", "gen"):
            print(json.dumps(report.details))
    return code


if __name__ == "__main__":
    sys.exit(main())
