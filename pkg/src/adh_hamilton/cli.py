"""Command-line front end: check, ham, verify, audit, gen.

Every graph-consuming command reads a graph6 stream (or one edge-list file
with ``--format edges``) and writes JSON lines, one record per input graph
followed by a summary line. Exit codes: 0 clean, 1 usage, 2 only parse
failures, 3 a fatal event (theorem counterexample or broken invariant).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import islice

from .audit import audit_graph
from .classes import class_profile
from .engine import MODES, HamiltonCycle, TheoremContradiction, find_hamilton_cycle, is_hamilton_cycle
from .generators import enumerate_labeled, gen_random, gen_remark1
from .graph import GraphFormatError, emit_graph6, parse_edge_list, parse_graph6
from .ore import InvariantError
from .oracle import hamiltonian_oracle
from .verify import verify_graph, structure_summary, theorem_mode

SCHEMA = "adh-hamilton/1"

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_FATAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# per-record work (module level so worker processes can run it)


def _run_check(G, opts):
    return {"profile": class_profile(G).to_json(), "outcome": {"kind": "check", **structure_summary(G)}}, "ok"


def _run_ham(G, opts):
    prof = class_profile(G)
    out = {"profile": prof.to_json()}
    if G.n < 3:
        out["outcome"] = {"kind": "hypothesis_violation", "witness": {"reason": "n < 3"}}
        return out, "ok"
    try:
        res = find_hamilton_cycle(G, opts["mode"])
    except TheoremContradiction as exc:
        out["outcome"] = {"kind": "theorem_contradiction", "message": str(exc)}
        return out, "fatal"
    if isinstance(res, HamiltonCycle) and not is_hamilton_cycle(G, res.cycle):
        raise InvariantError("engine produced an invalid Hamilton cycle")
    out["outcome"] = res.to_json()
    if opts["oracle"]:
        found = hamiltonian_oracle(G).found
        out["oracle"] = {"hamiltonian": found}
        if isinstance(res, HamiltonCycle) != found and res.kind in ("hamilton_cycle", "non_hamiltonian"):
            return out, "fatal"
    return out, "ok"


def _run_verify(G, opts):
    rec = verify_graph(G, opts["theorem"], oracle=opts["oracle"])
    out = rec.to_json()
    out.pop("i"), out.pop("g6"), out.pop("ms")
    out["_steps"] = rec.steps
    return out, "fatal" if rec.status == "counterexample" else "ok"


def _run_audit(G, opts):
    prof = class_profile(G)
    if G.n < 3:
        return {"profile": prof.to_json(), "outcome": {"kind": "audit", "applicable": False,
                                                       "reason": "n < 3"}}, "ok"
    try:
        reports = audit_graph(G)
    except ValueError as exc:  # acyclic input has no longest cycle
        return {"profile": prof.to_json(), "outcome": {"kind": "audit", "applicable": False,
                                                       "reason": str(exc)}}, "ok"
    if opts["component"] == "first":
        reports = reports[:1]
    outcome = {"kind": "audit", "applicable": reports[0].applicable,
               "holds": all(r.holds for r in reports),
               "components": [r.to_json() for r in reports]}
    if not reports[0].applicable:
        outcome["reason"] = reports[0].reason
    return {"profile": prof.to_json(), "outcome": outcome}, "ok"


RUNNERS = {"check": _run_check, "ham": _run_ham, "verify": _run_verify, "audit": _run_audit}


def process(task):
    """(command, index, line number, text, format, opts) -> (record, status)."""
    cmd, i, lineno, text, fmt, opts = task
    t0 = time.perf_counter()
    try:
        G = parse_edge_list(text) if fmt == "edges" else parse_graph6(text)
    except GraphFormatError as exc:
        return {"schema": SCHEMA, "i": i, "line": lineno, "error": str(exc)}, "parse_error"
    g6 = emit_graph6(G) if fmt == "edges" else text.strip()
    rec = {"schema": SCHEMA, "i": i, "g6": g6}
    try:
        body, status = RUNNERS[cmd](G, opts)
    except InvariantError as exc:
        body, status = {"outcome": {"kind": "invariant_error", "message": str(exc)}}, "fatal"
    rec.update(body)
    rec["ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return rec, status


# ---------------------------------------------------------------------------
# input / output


def _open_input(path: str):
    if path == "-":
        return sys.stdin
    try:
        return open(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _records(fh, fmt: str):
    """(line number, text) per graph; edge-list files hold a single graph."""
    if fmt == "edges":
        yield 1, fh.read()
        return
    for lineno, line in enumerate(fh, 1):
        if line.strip():
            yield lineno, line.rstrip("\n")


def _emit(obj, out):
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def run_stream(args, out=sys.stdout) -> int:
    opts = {
        "mode": getattr(args, "mode", None),
        "theorem": getattr(args, "theorem", None),
        "oracle": getattr(args, "oracle", "off") == "on",
        "component": getattr(args, "component", "all"),
    }
    fh = _open_input(args.input)
    tasks = ((args.command, i, lineno, text, args.format, opts)
             for i, (lineno, text) in enumerate(_records(fh, args.format)))
    if args.limit is not None:
        tasks = islice(tasks, args.limit)

    status_counts: Counter = Counter()
    kinds: Counter = Counter()
    templates: Counter = Counter()
    halted = False
    pool = ProcessPoolExecutor(args.jobs) if args.jobs > 1 else None
    try:
        results = pool.map(process, tasks, chunksize=64) if pool else map(process, tasks)
        for rec, status in results:  # map preserves input order
            steps = rec.pop("_steps", [])
            templates.update(steps)
            status_counts[status] += 1
            if "outcome" in rec:
                kinds[rec.get("status") or rec["outcome"]["kind"]] += 1
            _emit(rec, out)
            if status == "fatal" and args.command == "verify":
                halted = True
                break
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)
        if fh is not sys.stdin:
            fh.close()

    summary = {"schema": SCHEMA, "summary": True, "command": args.command,
               "records": sum(status_counts.values()), "parse_errors": status_counts["parse_error"],
               "fatal": status_counts["fatal"], "kinds": dict(sorted(kinds.items()))}
    if args.command == "verify":
        summary["theorem"] = theorem_mode(args.theorem)
        summary["halted"] = halted
        summary["templates"] = dict(sorted(templates.items()))
    _emit(summary, out)
    if status_counts["fatal"]:
        return EXIT_FATAL
    if status_counts["parse_error"]:
        return EXIT_PARSE
    return EXIT_OK


def run_gen(args, out=sys.stdout) -> int:
    if args.family == "remark1":
        graphs = iter([gen_remark1(args.n)])
    elif args.family == "random":
        if args.p is None:
            raise UsageError("gen random needs --p")
        graphs = iter([gen_random(args.n, args.p, args.seed)])
    else:
        graphs = enumerate_labeled(args.n)
    for G in islice(graphs, args.limit):
        out.write(emit_graph6(G) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="adh-hamilton", description="Hamiltonicity checks for almost distance-hereditary graphs.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def stream_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="graph6 file, or - for stdin")
        p.add_argument("--format", choices=("g6", "edges"), default="g6",
                       help="edges: a single graph as 'n u1 v1 u2 v2 ...'")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--limit", type=int, default=None, help="stop after this many records")
        return p

    stream_cmd("check", "class profile, connectivity, DH/ADH verdicts")
    p = stream_cmd("ham", "find Hamilton cycles with the extension engine")
    p.add_argument("--mode", choices=MODES, default="theorem3")
    p.add_argument("--oracle", choices=("on", "off"), default="off", help="cross-check with brute force")
    p = stream_cmd("verify", "check a theorem on every graph of a stream")
    p.add_argument("--theorem", choices=("3", "4"), default="3")
    p.add_argument("--oracle", choices=("on", "off"), default="on")
    p = stream_cmd("audit", "audit the non-extendability facts around longest cycles")
    p.add_argument("--component", choices=("first", "all"), default="all")

    p = sub.add_parser("gen", help="emit a graph family as graph6")
    p.add_argument("family", choices=("remark1", "random", "labeled"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int, default=None)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        if args.command == "gen":
            return run_gen(args, out)
        return run_stream(args, out)
    except (UsageError, ValueError) as exc:
        print(f"adh-hamilton: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
