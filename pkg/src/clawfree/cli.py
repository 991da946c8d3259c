"""
clawfree CLI
============

Command-line interface for the claw/co-claw toolkit.

Usage:
    clawfree classify [FILE] [--dot]
    clawfree edge-graph [FILE] [--complement] [--dot]
    clawfree homog [FILE] [--against FILE2]
    clawfree decompose [FILE] [--generic] [--dot]
    clawfree incidence --v V --k K [--t T] [--members] [--matrix]
    clawfree verify --suite SUITE --n N [--jobs J] [--samples S] [--seed X] [--json]

Graphs are read from FILE or stdin, as graph6 or as an edge list.
Exit codes: 0 affirmative, 1 negative, 2 usage or parse error.
"""

import logging
import sys
from math import comb
from typing import List, Optional

from . import __version__
from .decompose import decompose, decompose_generic, verify_decomposition
from .edge_graph import edge_graph
from .formats import encode_graph6, labeled_to_text, read_graph, to_dot
from .graph import Graph, complement
from .harness import Suite, VerifyOptions, run_suite
from .homogeneous import homogeneous_triples, triple_diff
from .incidence import (
    build_W,
    gf2_kernel,
    gf2_rank,
    inclusion_rank,
    wilson_kernel_members,
)
from .structure import classify

# ── ANSI Colors ──────────────────────────────────────────────────────
BOLD = "\033[1m"
DIM = "\033[2m"
GREEN = "\033[32m"
CYAN = "\033[36m"
YELLOW = "\033[33m"
RED = "\033[31m"
RESET = "\033[0m"
CHECK = f"{GREEN}✓{RESET}"
CROSS = f"{RED}✗{RESET}"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Bad command line."""


def _set_colors(enabled: bool) -> None:
    global BOLD, DIM, GREEN, CYAN, YELLOW, RED, RESET, CHECK, CROSS
    if enabled:
        return
    BOLD = DIM = GREEN = CYAN = YELLOW = RED = RESET = ""
    CHECK, CROSS = "✓", "✗"


def _header(title: str):
    print(f"\n{CYAN}  ◈ {title}{RESET}")
    print(f"  {DIM}{'─' * 50}{RESET}")


# ── Argument helpers ─────────────────────────────────────────────────

_VALUE_FLAGS = ("--v", "--k", "--t", "--suite", "--n", "--jobs", "--samples",
                "--seed", "--max-counterexamples", "--against")


def _option(args: List[str], name: str) -> Optional[str]:
    if name not in args:
        return None
    idx = args.index(name)
    if idx + 1 >= len(args):
        raise UsageError(f"{name} needs a value")
    return args[idx + 1]


def _int_option(args: List[str], name: str, default: Optional[int] = None) -> Optional[int]:
    value = _option(args, name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{name} expects an integer, got {value!r}") from None


def _positionals(args: List[str]) -> List[str]:
    out = []
    skip = False
    for a in args:
        if skip:
            skip = False
        elif a in _VALUE_FLAGS:
            skip = True
        elif not a.startswith("--"):
            out.append(a)
    return out


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _input_graph(args: List[str]) -> Graph:
    pos = _positionals(args)
    return read_graph(_read_text(pos[0] if pos else None))


# ── Commands ─────────────────────────────────────────────────────────

def cmd_classify(args: List[str]) -> int:
    g = _input_graph(args)
    cert = classify(g)
    if "--dot" in args:
        print(f"// {cert.to_text()}")
        print(to_dot(g), end="")
    else:
        print(cert.to_text())
    return EXIT_OK if cert.in_class else EXIT_NEGATIVE


def cmd_edge_graph(args: List[str]) -> int:
    u = _input_graph(args)
    if "--complement" in args:
        u = complement(u)
    s = edge_graph(u)
    print(to_dot(s.base, name="S") if "--dot" in args else labeled_to_text(s), end="")
    return EXIT_OK


def cmd_homog(args: List[str]) -> int:
    g = _input_graph(args)
    other = _option(args, "--against")
    if other is None:
        print(homogeneous_triples(g).to_text(), end="")
        return EXIT_OK
    h = read_graph(_read_text(other))
    only_g, only_h = triple_diff(g, h)
    for a, b, c in only_g:
        print(f"- {a} {b} {c}")
    for a, b, c in only_h:
        print(f"+ {a} {b} {c}")
    return EXIT_OK if not (only_g or only_h) else EXIT_NEGATIVE


def cmd_decompose(args: List[str]) -> int:
    u = _input_graph(args)
    d = decompose_generic(u) if "--generic" in args else decompose(u)
    if d is None:
        print("none")
        return EXIT_NEGATIVE
    ok = verify_decomposition(d)
    if "--dot" in args:
        print(to_dot(d.g, name="G"), end="")
        print(to_dot(d.g_prime, name="G_prime"), end="")
    else:
        print(d.to_text(verified=ok), end="")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_incidence(args: List[str]) -> int:
    v = _int_option(args, "--v")
    k = _int_option(args, "--k")
    t = _int_option(args, "--t", 2)
    if v is None or k is None:
        raise UsageError("incidence needs --v and --k")
    w = build_W(t, k, v)
    rank_q = inclusion_rank(w)
    print(f"W_{t},{k} on {v} points: {w.rows} x {w.cols}")
    if "--matrix" in args:
        print(w.to_text(), end="")
    print(f"rational rank: {rank_q}")
    print(f"full row rank: {'yes' if rank_q == comb(v, t) else 'no'}")
    print(f"gf2 rank: {gf2_rank(w)}")
    print(f"gf2 kernel dim: {len(gf2_kernel(w.transpose()))}")
    if "--members" in args:
        report = wilson_kernel_members(v, k)
        for m in report.members:
            tags = []
            if m.complete_bipartite:
                tags.append("complete-bipartite")
            if m.co_complete_bipartite:
                tags.append("co-complete-bipartite")
            if m.property2:
                tags.append("property2")
            print(f"{encode_graph6(m.graph)} {' '.join(tags) or 'unexplained'}")
        return EXIT_OK if report.all_explained else EXIT_NEGATIVE
    return EXIT_OK


def cmd_verify(args: List[str]) -> int:
    suite = _option(args, "--suite")
    n = _int_option(args, "--n")
    if suite is None or n is None:
        raise UsageError("verify needs --suite and --n")
    fields = {"suite": suite, "n": n, "seed": _int_option(args, "--seed", 0)}
    for flag, key in (("--jobs", "jobs"), ("--samples", "samples"),
                      ("--max-counterexamples", "max_counterexamples")):
        value = _int_option(args, flag)
        if value is not None:
            fields[key] = value
    options = VerifyOptions(**fields)
    report = run_suite(options)

    if "--json" in args:
        print(report.model_dump_json(indent=2))
        return EXIT_OK if report.ok else EXIT_NEGATIVE

    _header(f"{options.suite.value}  n={options.n}  ({options.mode}, {options.jobs} jobs)")
    mark = CHECK if report.ok else CROSS
    color = GREEN if report.ok else RED
    print(f"  {mark} {color}{report.summary()}{RESET}  {DIM}{report.elapsed:.2f}s{RESET}")
    for text in report.mismatches:
        print(f"    {YELLOW}{text}{RESET}")
    if report.mismatch_count > len(report.mismatches):
        print(f"    {DIM}... {report.mismatch_count - len(report.mismatches)} more{RESET}")
    print()
    return EXIT_OK if report.ok else EXIT_NEGATIVE


COMMANDS = {
    "classify": cmd_classify,
    "edge-graph": cmd_edge_graph,
    "homog": cmd_homog,
    "decompose": cmd_decompose,
    "incidence": cmd_incidence,
    "verify": cmd_verify,
}


def _usage():
    suites = " | ".join(s.value for s in Suite)
    print(f"""
{CYAN}  ◈ clawfree{RESET} {DIM}v{__version__}{RESET}
{DIM}  Claw-free and co-claw-free graphs, Boolean sums and incidence matrices{RESET}

  {BOLD}Commands:{RESET}
    {GREEN}classify{RESET} [FILE] [--dot]                 Certificate for Forb(claw, co-claw)
    {GREEN}edge-graph{RESET} [FILE] [--complement]        S(U) as graph6 plus pair labels
    {GREEN}homog{RESET} [FILE] [--against FILE2]          3-homogeneous triples (or their diff)
    {GREEN}decompose{RESET} [FILE] [--generic]            U = G + G' with equal H3
    {GREEN}incidence{RESET} --v V --k K [--t T]           Rank and GF(2) kernel of W_tk
    {GREEN}verify{RESET} --suite S --n N [--jobs J]       Exhaustive verification suite

  {BOLD}Suites:{RESET} {DIM}{suites}{RESET}
  {BOLD}Input:{RESET}  {DIM}graph6 (optional >>graph6<< prefix) or "n m" edge list, from FILE or stdin{RESET}

  {BOLD}Examples:{RESET}
    {DIM}${RESET} echo Cs | clawfree classify
    {DIM}${RESET} clawfree verify --suite theorem1 --n 6
    {DIM}${RESET} clawfree incidence --v 7 --k 5 --members
""")


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the exit code."""
    args = list(sys.argv[1:] if argv is None else argv)
    _set_colors(sys.stdout.isatty())
    if "--verbose" in args:
        args.remove("--verbose")
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr,
                            format="%(asctime)s %(name)s %(levelname)s %(message)s")

    if not args or args[0] in ("-h", "--help", "help"):
        _usage()
        return EXIT_OK if args else EXIT_USAGE

    cmd = args[0].lower()
    handler = COMMANDS.get(cmd)
    if handler is None:
        print(f"error: unknown command {cmd!r} (known: {', '.join(COMMANDS)})", file=sys.stderr)
        return EXIT_USAGE
    try:
        return handler(args[1:])
    except ValueError as e:
        # parse errors, bounds, and pydantic validation all land here
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
