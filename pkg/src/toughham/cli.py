"""Command-line front door.

Exit codes: 0 success, 2 usage or input parse error, 3 solver cap exceeded,
4 internal validation failure, 5 verified violation found by a campaign.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator

from . import graph as gc
from . import harness
from .errors import BudgetExhausted, CapExceeded, MalformedEdgeList, ToughHamError, ValidationFailure
from .graph6 import parse_graph6, write_graph6
from .hamilton import OrientedCycle
from .replay import outcome_json, replay

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4
EXIT_VIOLATION = 5


class InputError(Exception):
    pass


def read_graphs(source: str) -> list[tuple[str, gc.Graph]]:
    """Graphs from a graph6 stream or a single edge-list file (``-`` is stdin)."""
    if source == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(source, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise InputError(f"{source}: input is not ASCII") from exc
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise InputError(f"{source}: no graph found")
    first = lines[0].split()
    try:
        if len(first) == 2 and all(tok.isdigit() for tok in first):
            return [(os.path.basename(source), gc.parse_edge_list(text))]
        return [(line, parse_graph6(line)) for _, line in harness.graph6_corpus(lines)]
    except (ValueError, MalformedEdgeList) as exc:
        raise InputError(f"{source}: {exc}") from exc


def read_cycle(path: str) -> OrientedCycle:
    try:
        with open(path) as fh:
            tokens = fh.read().replace(",", " ").split()
        return OrientedCycle(tuple(int(tok) for tok in tokens))
    except (OSError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


@contextmanager
def open_output(path: str | None) -> Iterator:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if lo_i > hi_i or lo_i < 1:
        raise argparse.ArgumentTypeError(f"empty or invalid range {text!r}")
    return lo_i, hi_i


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, action="append", help="freeness parameter (repeatable for check)")
    common.add_argument("--cap-n", type=positive_int, help="vertex cap for exponential solvers")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=positive_int, default=1)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write JSONL here instead of standard output")

    p = argparse.ArgumentParser(prog="toughham", description="Toughness, hamiltonicity and proof replay for small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="profile every graph in the input")
    c.add_argument("input")

    r = sub.add_parser("replay", parents=[common], help="replay the longest-cycle argument on one graph")
    r.add_argument("input")
    r.add_argument("--cycle", help="file with the cycle's vertex sequence (default: a computed longest cycle)")

    v = sub.add_parser("verify", parents=[common], help="run a verification campaign")
    v.add_argument("campaign", choices=("theorem", "corollary", "bauer", "cross"))
    v.add_argument("--corpus", default="builtin:atlas7",
                   help="graph6 file, '-', builtin:atlas7 or builtin:theorem")
    v.add_argument("--t", default="1", help="toughness threshold for the bauer campaign")

    h = sub.add_parser("hunt", parents=[common], help="search for counterexamples to the 1-tough conjecture")
    h.add_argument("--n", type=parse_range, default=(9, 14))
    h.add_argument("--budget", type=int, default=1000)

    g = sub.add_parser("gen", parents=[common], help="print a named graph in graph6")
    g.add_argument("family", choices=("complete", "complete-bipartite", "cycle", "path", "empty", "petersen", "gnp", "forbidden"))
    g.add_argument("params", nargs="*")
    return p


def _k(args, default: int | None = None) -> int | None:
    return args.k[-1] if args.k else default


def cmd_check(args) -> int:
    ks = args.k or []
    with open_output(args.output) as out:
        for gid, g in read_graphs(args.input):
            prof = harness.profile(g, ks, gid)
            if args.format == "json":
                out.write(harness.dumps({"schema": harness.SCHEMA, "type": "profile", **prof.to_json()}) + "\n")
            else:
                out.write(prof.to_text() + "\n")
    return EXIT_OK


def cmd_replay(args, parser) -> int:
    k = _k(args)
    if k is None or k < 4:
        parser.error("replay requires --k with k >= 4")
    graphs = read_graphs(args.input)
    cyc = read_cycle(args.cycle) if args.cycle else None
    with open_output(args.output) as out:
        for gid, g in graphs:
            outcome = replay(g, k, cyc)
            rec = outcome_json(outcome)
            if args.format == "json":
                out.write(harness.dumps(rec) + "\n")
            else:
                detail = rec.get("which") or rec.get("tag") or ""
                extra = f" ratio={rec['ratio']}" if "ratio" in rec else ""
                out.write(f"{gid}: {rec['outcome']} {detail}{extra}".rstrip() + "\n")
                out.write(json.dumps(rec, sort_keys=True) + "\n")
    return EXIT_OK


def _corpus(source: str, seed: int) -> tuple[list, dict]:
    if source == "builtin:atlas7":
        return harness.atlas_corpus(), {"source": "builtin:atlas7"}
    if source == "builtin:theorem":
        return harness.theorem_corpus(seed or 2024), {"source": "builtin:theorem", "seed": seed or 2024}
    if source == "-":
        return list(harness.graph6_corpus(sys.stdin.buffer)), {"source": "stdin"}
    try:
        corpus = list(harness.file_corpus(source))
    except OSError as exc:
        raise InputError(str(exc)) from exc
    for _, line in corpus:
        try:
            parse_graph6(line)
        except ValueError as exc:
            raise InputError(f"{source}: {exc}") from exc
    return corpus, {"source": os.path.basename(source)}


def _finish(report: harness.CampaignReport, args, out, text_out) -> int:
    summary = report.summary()
    if args.format == "json" or args.output:
        out.write(harness.dumps(summary) + "\n")
    if args.format == "text":
        c = summary["counts"]
        text_out.write(
            f"{report.campaign}: scanned={c['scanned']} satisfying={c['hypothesis_satisfying']} "
            f"holds={c['conclusion_holds']} violations={c['violations']} status={report.status}\n"
        )
    if not report.violations:
        return EXIT_OK
    if all(v.get("verified") for v in report.violations):
        return EXIT_VIOLATION
    return EXIT_INTERNAL


def _sink(args, out):
    if args.format == "json" or args.output:
        return lambda rec: out.write(harness.dumps(rec) + "\n")
    return None


def cmd_verify(args, parser) -> int:
    corpus, desc = _corpus(args.corpus, args.seed)
    with open_output(args.output) as out:
        sink = _sink(args, out)
        if args.campaign == "theorem":
            report = harness.verify_theorem(corpus, _k(args, 4), args.jobs, sink, desc)
        elif args.campaign == "corollary":
            report = harness.verify_corollary(corpus, _k(args, 4), args.jobs, sink, desc)
        elif args.campaign == "bauer":
            try:
                t = Fraction(args.t)
            except ValueError:
                parser.error(f"invalid --t {args.t!r}")
            report = harness.verify_bauer(corpus, t, args.jobs, sink, desc)
        else:
            report = harness.cross_checks(corpus, args.jobs, sink, desc)
        return _finish(report, args, out, sys.stdout)


def cmd_hunt(args, parser) -> int:
    k = _k(args, 4)
    if k < 4:
        parser.error("hunt requires k >= 4")
    with open_output(args.output) as out:
        try:
            report = harness.hunt_conjecture(args.n, k, args.budget, args.seed, args.jobs, _sink(args, out))
        except BudgetExhausted as exc:
            report = exc.report
        return _finish(report, args, out, sys.stdout)


def cmd_gen(args, parser) -> int:
    fam, params = args.family, args.params
    want = {"complete": 1, "complete-bipartite": 2, "cycle": 1, "path": 1, "empty": 1,
            "petersen": 0, "gnp": 2, "forbidden": 1}[fam]
    if len(params) != want:
        parser.error(f"{fam} takes {want} parameter(s)")
    try:
        if fam == "petersen":
            g = gc.petersen()
        elif fam == "complete-bipartite":
            g = gc.complete_bipartite(int(params[0]), int(params[1]))
        elif fam == "gnp":
            g = gc.random_gnp(int(params[0]), Fraction(params[1]), args.seed)
        else:
            g = {"complete": gc.complete, "cycle": gc.cycle, "path": gc.path,
                 "empty": gc.empty, "forbidden": gc.forbidden_pattern}[fam](int(params[0]))
    except ValueError as exc:
        parser.error(str(exc))
    with open_output(args.output) as out:
        out.write(write_graph6(g).decode("ascii") + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("TOUGHHAM_CAP_N")
    if args.cap_n is not None:
        os.environ["TOUGHHAM_CAP_N"] = str(args.cap_n)
    try:
        return _dispatch(args, parser)
    finally:
        if saved is None:
            os.environ.pop("TOUGHHAM_CAP_N", None)
        else:
            os.environ["TOUGHHAM_CAP_N"] = saved


def _dispatch(args, parser) -> int:
    try:
        if args.command == "check":
            return cmd_check(args)
        if args.command == "replay":
            return cmd_replay(args, parser)
        if args.command == "verify":
            return cmd_verify(args, parser)
        if args.command == "hunt":
            return cmd_hunt(args, parser)
        return cmd_gen(args, parser)
    except InputError as exc:
        print(f"toughham: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"toughham: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValidationFailure as exc:
        print(f"toughham: internal validation failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ToughHamError as exc:
        print(f"toughham: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
