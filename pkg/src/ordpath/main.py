#!/usr/bin/env python3
import argparse
import csv
import io
import json
import logging
import re
import sys
import time

import networkx as nx

from . import config, extremal, ktt, oracles, patterns, solvers
from .core import (
    read_host_file,
    read_pattern_file,
    serialize_ordered_graph,
    serialize_path_graph,
)
from .errors import (
    CapExceededError,
    InternalInvariantError,
    InvalidPathError,
    ParseError,
    PreconditionError,
)
from .records import RunRecord, append_record, hash_inputs, sha256_text
from .verify import SUITE_NAMES, VerifyOptions, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_USAGE = 2
EXIT_CAP = 3

GHN_COLUMNS = ["pattern", "n", "ghn", "witness_chords", "count_avoiding", "elapsed_ms"]


def configure_logging(level=None, log_file=None):
    """
    Set up root logging once: stderr always, a log file when configured.

    Args:
        level: level name, defaults to LOG_LEVEL
        log_file: path, defaults to ORDPATH_LOG_FILE (no file when unset)
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = log_file or config.LOG_FILE
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, (level or config.LOG_LEVEL).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


class UsageError(Exception):
    """Arguments parsed but do not make sense together."""


class CommandResult:
    """What a subcommand produced: payload for records, text for the user."""

    def __init__(self, payload, text=None, inputs=(), status=EXIT_OK, table=None):
        self.payload = payload
        self.text = text
        self.inputs = [p for p in inputs if p]
        self.status = status
        self.table = table


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

GEN_KINDS = (
    "example1", "example2", "halfgraph", "Mi", "pi", "planar", "genus", "random-host",
    "alternating-biclique", "spread-biclique", "biclique-pattern", "complete-host",
)


def graph_from_name(name):
    """Plain graphs by name: K<n>, K<a>,<b>, C<n>, P<n> or petersen."""
    name = name.strip()
    if name.lower() == "petersen":
        return nx.petersen_graph()
    match = re.fullmatch(r"K(\d+),(\d+)", name)
    if match:
        return nx.complete_bipartite_graph(int(match.group(1)), int(match.group(2)))
    match = re.fullmatch(r"([KCP])(\d+)", name)
    if match:
        build = {"K": nx.complete_graph, "C": nx.cycle_graph, "P": nx.path_graph}[match.group(1)]
        return build(int(match.group(2)))
    raise UsageError(f"unknown graph {name!r}; use K<n>, K<a>,<b>, C<n>, P<n> or petersen")


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"gen {args.kind} needs {', '.join(missing)}")


def cmd_gen(args):
    kind = args.kind
    if kind == "example1":
        _need(args, "n")
        obj = extremal.gen_example1(args.n)
    elif kind == "example2":
        _need(args, "i")
        obj = extremal.gen_example2(args.i)
    elif kind == "halfgraph":
        _need(args, "m")
        obj = patterns.gen_halfgraph_pattern(args.m)
    elif kind == "Mi":
        _need(args, "i")
        obj = patterns.gen_Mi(args.i)
    elif kind == "pi":
        _need(args, "graph")
        obj = patterns.gen_pi(graph_from_name(args.graph))
    elif kind == "planar":
        obj = patterns.gen_planar_pattern()
    elif kind == "genus":
        _need(args, "k")
        obj = patterns.gen_genus_pattern(args.k)
    elif kind == "random-host":
        _need(args, "n", "density", "seed")
        obj = extremal.random_host(args.n, args.density, args.seed)
    elif kind == "alternating-biclique":
        _need(args, "t")
        obj = extremal.gen_alternating_biclique(args.t)
    elif kind == "spread-biclique":
        _need(args, "side", "seed")
        obj = extremal.gen_spread_biclique_host(args.side, args.seed, extra_density=args.density or 0.0)
    elif kind == "biclique-pattern":
        _need(args, "side")
        obj = patterns.gen_ordered_biclique(args.side)
    else:
        _need(args, "n")
        obj = extremal.complete_host(args.n)

    if isinstance(obj, patterns.OrderedGraph):
        text = serialize_ordered_graph(obj)
    else:
        text = serialize_path_graph(obj)
    digest = sha256_text(text)
    logger.info(f"🔢 gen {kind}: {obj.n} vertices, sha256 {digest}")
    return CommandResult({"kind": kind, "vertices": obj.n, "sha256": digest}, text=text)


# ---------------------------------------------------------------------------
# pattern / classify
# ---------------------------------------------------------------------------

def cmd_pattern(args):
    h = read_pattern_file(args.input)
    inputs = [args.input]
    if args.op == "info":
        return CommandResult(patterns.describe(h), inputs=inputs)
    if args.op == "hat":
        out = patterns.hat(h)
    elif args.op == "concat":
        if not args.second:
            raise UsageError("pattern concat needs -j SECOND")
        out = patterns.concat(h, read_pattern_file(args.second))
        inputs.append(args.second)
    elif args.op == "plus":
        if args.k is None:
            raise UsageError("pattern plus needs --k")
        out = patterns.plus_h(h, args.k)
    else:
        out = patterns.strip_isolated(h)
    text = serialize_ordered_graph(out)
    return CommandResult({"op": args.op, "vertices": out.n, "sha256": sha256_text(text)}, text=text, inputs=inputs)


def cmd_classify(args):
    h = read_pattern_file(args.input)
    return CommandResult(patterns.describe(h), inputs=[args.input])


# ---------------------------------------------------------------------------
# solve / grs / main-thm
# ---------------------------------------------------------------------------

SOLVE_ALGORITHMS = ("span", "noncrossing", "crossing-free", "gap", "matching", "hat", "grs")


def _path_dict(path):
    return {"vertices": list(path.vertices), "order": path.order, "increasing": path.increasing}


def _require_pattern(args):
    if not args.pattern:
        raise UsageError(f"solve {args.algorithm} needs --pattern")
    return read_pattern_file(args.pattern)


def cmd_solve(args):
    host = read_host_file(args.input)
    inputs = [args.input, args.pattern]
    algorithm = args.algorithm
    if algorithm == "span":
        payload = {"kind": solvers.PATH, "provenance": "span", **_path_dict(solvers.span_path(host))}
    elif algorithm == "crossing-free":
        left, right = solvers.solve_crossing_free(host)
        payload = {"kind": "pair", "left": _path_dict(left), "right": _path_dict(right)}
    elif algorithm == "noncrossing":
        payload = solvers.solve_noncrossing(host, _require_pattern(args)).to_dict()
    elif algorithm == "matching":
        payload = solvers.solve_matching(host, _require_pattern(args)).to_dict()
    elif algorithm == "hat":
        payload = solvers.solve_hat(host, _require_pattern(args)).to_dict()
    elif algorithm == "gap":
        if args.m is None or args.t is None:
            raise UsageError("solve gap needs --m and --t")
        payload = solvers.find_gap_or_path(host, _require_pattern(args), args.m, args.t).to_dict()
    else:
        if args.p is None:
            raise UsageError("solve grs needs --p")
        payload = solvers.grs_search(host, args.p).to_dict()
    return CommandResult(payload, inputs=inputs)


def cmd_grs(args):
    host = read_host_file(args.input)
    return CommandResult(solvers.grs_search(host, args.p).to_dict(), inputs=[args.input])


def cmd_main_thm(args):
    host = read_host_file(args.input)
    outcome = ktt.main_pipeline(host, args.t, s_override=args.force_s)
    status = EXIT_PROPERTY if outcome.stage == ktt.STAGE_CONTRADICTION else EXIT_OK
    return CommandResult(outcome.to_dict(), inputs=[args.input], status=status)


# ---------------------------------------------------------------------------
# oracle / ghn
# ---------------------------------------------------------------------------

ORACLES = ("longest", "increasing", "contains", "ktt", "ramsey", "s")


def cmd_oracle(args):
    query = args.query
    if query == "ramsey":
        if None in (args.q, args.N, args.k):
            raise UsageError("oracle ramsey needs --q, --N and --k")
        value = oracles.ramsey_upper(args.q, args.N, args.k)
        if isinstance(value, oracles.TowerEstimate):
            return CommandResult({"query": query, **value.to_dict()})
        return CommandResult({"query": query, "value": str(value), "bits": value.bit_length()})
    if query == "s":
        if (args.n is None) == (args.bits is None):
            raise UsageError("oracle s needs exactly one of --n and --bits")
        value = ktt.s_from_n(args.n, args.t or 1, bits=args.bits)
        return CommandResult({"query": query, "t": args.t or 1, "s": value})

    if not args.input:
        raise UsageError(f"oracle {query} needs -i HOST")
    host = read_host_file(args.input)
    inputs = [args.input, args.pattern]
    if query == "longest":
        payload = _path_dict(oracles.longest_induced_path_exact(host))
    elif query == "increasing":
        payload = _path_dict(oracles.longest_increasing_induced_path_exact(host))
    elif query == "contains":
        if not args.pattern:
            raise UsageError("oracle contains needs --pattern")
        emb = patterns.contains_pattern(host, read_pattern_file(args.pattern))
        payload = {"contains": emb is not None}
        if emb is not None:
            payload.update(positions=list(emb.positions), gap=emb.gap)
    else:
        if args.t is None:
            raise UsageError("oracle ktt needs --t")
        witness = oracles.contains_ktt(host, args.t)
        payload = {"contains": witness is not None}
        if witness is not None:
            payload.update(witness.to_dict())
    return CommandResult({"query": query, **payload}, inputs=inputs)


def _ghn_sizes(args):
    if args.n is not None:
        return [args.n]
    if args.n_from is None or args.n_to is None:
        raise UsageError("ghn needs --n or both --n-from and --n-to")
    return list(range(args.n_from, args.n_to + 1))


def cmd_ghn(args):
    h = read_pattern_file(args.pattern)
    threads = config.resolve_threads(args.threads)
    rows, table = [], []
    for n in _ghn_sizes(args):
        started = time.perf_counter()
        result = oracles.ghn_exact(h, n, threads)
        elapsed = (time.perf_counter() - started) * 1000
        rows.append(result.to_dict())
        chords = result.witness.sorted_chords() if result.witness else None
        table.append({
            "pattern": args.pattern,
            "n": n,
            "ghn": "inf" if result.unavoidable else result.value,
            "witness_chords": "" if chords is None else ";".join(f"{i}-{j}" for i, j in chords),
            "count_avoiding": result.count_avoiding,
            "elapsed_ms": f"{elapsed:.1f}",
        })
    return CommandResult({"pattern": args.pattern, "rows": rows}, inputs=[args.pattern], table=table)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args):
    opts = VerifyOptions(quick=args.quick, corrupt=args.corrupt, threads=config.resolve_threads(args.threads))
    reports = run_suite(args.suite, opts)
    passed = all(r.passed for r in reports)
    for report in reports:
        for result in report.results:
            mark = "✅" if result.passed else "❌"
            print(f"{mark} {report.suite}.{result.name}", file=sys.stderr)
    payload = {"passed": passed, "quick": args.quick, "suites": [r.to_dict() for r in reports]}
    return CommandResult(payload, status=EXIT_OK if passed else EXIT_PROPERTY)


# ---------------------------------------------------------------------------
# Arguments and dispatch
# ---------------------------------------------------------------------------

def parse_arguments(argv=None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog="ordpath",
        description="Ordered-graph pattern avoidance and long induced paths",
    )
    parser.add_argument("--format", choices=["json", "csv"], default=None,
                        help="Output format (ghn defaults to csv, everything else to json)")
    parser.add_argument("--threads", type=int, default=None,
                        help="Worker processes for ghn (overrides ORDPATH_THREADS)")
    parser.add_argument("-o", "--output", default=None, help="Write the result to this file")
    parser.add_argument("--record", default=None, help="Append a JSON-lines run record to this file")
    parser.add_argument("--log-level", default=None, help="Logging level (overrides LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="Generate a host or pattern file")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--side", type=int)
    p.add_argument("--graph", help="K<n>, K<a>,<b>, C<n>, P<n> or petersen")
    p.add_argument("--density", type=float)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("pattern", help="Pattern algebra")
    p.add_argument("op", choices=["hat", "concat", "plus", "strip", "info"])
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-j", "--second")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("classify", help="Growth class and structural predicates of a pattern")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="Run a constructive solver on a host")
    p.add_argument("algorithm", choices=SOLVE_ALGORITHMS)
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--pattern")
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="Exhaustive ground truth")
    p.add_argument("query", choices=ORACLES)
    p.add_argument("-i", "--input")
    p.add_argument("--pattern")
    p.add_argument("--t", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--bits", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("ghn", help="Exact g_H(n) by enumerating every host")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--n-from", type=int)
    p.add_argument("--n-to", type=int)
    p.set_defaults(func=cmd_ghn)

    p = sub.add_parser("grs", help="Induced path or ordered half-graph via 4-set colourings")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_grs)

    p = sub.add_parser("main-thm", help="Path, K_{t,t}, or a report of the stage reached")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--force-s", type=int, default=None)
    p.set_defaults(func=cmd_main_thm)

    p = sub.add_parser("verify", help="Run property suites")
    p.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p.add_argument("--quick", action="store_true", help="Reduced sizes")
    p.add_argument("--corrupt", action="store_true", help="Inject a corrupted clique fixture")
    p.set_defaults(func=cmd_verify)

    return parser.parse_args(argv)


def _render(result, fmt):
    if fmt == "csv":
        if result.table is None:
            raise UsageError("--format csv is only available for tabular commands (ghn)")
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=GHN_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(result.table)
        return buffer.getvalue()
    if result.text is not None:
        return result.text
    return json.dumps(result.payload, indent=2) + "\n"


def _emit(text, output, payload):
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"💾 wrote {output}")
        if "sha256" in payload:
            print(f"sha256 {payload['sha256']}")
    else:
        sys.stdout.write(text)
        if "sha256" in payload:
            # stdout carries the artifact itself
            print(f"sha256 {payload['sha256']}", file=sys.stderr)


def _parameters(args):
    skip = {"func", "record", "output", "log_level"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(args):
    """Execute parsed arguments; returns the exit code."""
    started = time.perf_counter()
    try:
        result = args.func(args)
        fmt = args.format or ("csv" if result.table is not None else "json")
        _emit(_render(result, fmt), args.output, result.payload)
    except UsageError as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE
    except (ParseError, PreconditionError, InvalidPathError, FileNotFoundError) as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return EXIT_USAGE
    except CapExceededError as e:
        logger.error(f"❌ resource cap exceeded: {e}")
        return EXIT_CAP
    except InternalInvariantError as e:
        logger.error(f"❌ internal invariant violated: {e}")
        return EXIT_PROPERTY

    if args.record:
        record = RunRecord(
            command=args.command,
            inputs=hash_inputs(result.inputs),
            parameters=_parameters(args),
            seed=getattr(args, "seed", None),
            payload=result.payload,
            elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
        )
        append_record(record, args.record)
    return result.status


def main(argv=None):
    """Main entry point."""
    args = parse_arguments(argv)
    configure_logging(args.log_level)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
