"""Command-line interface: construct / check / realize.

Exit codes: 0 success, 1 internal invariant failure, 2 budget refusal,
3 domain error (bad graph, unmet precondition), 4 usage error.  JSON goes
to stdout (big integers as decimal strings), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .certificate import DEFAULT_M_CAP
from .enumeration import (
    binomial_ratio_check,
    check_clique_extension,
    independence_polynomial,
    is_well_covered,
)
from .errors import BudgetExceededError
from .function_graph import DEFAULT_VERTEX_BUDGET, build_function_graph
from .graph import Graph
from .graph6 import Graph6Error, from_graph6, to_graph6
from .tailorder import TailPermutation, realize

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_BUDGET = 2
EXIT_DOMAIN = 3
EXIT_USAGE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 4, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class CliConfig:
    vertex_budget: int = DEFAULT_VERTEX_BUDGET
    m_cap: int = DEFAULT_M_CAP
    fmt: str = "json"
    out: Optional[str] = None
    seed: int = 0

    def __post_init__(self):
        if self.vertex_budget <= 0 or self.m_cap <= 0:
            raise ValueError("budgets must be positive")


def _build_parser() -> _Parser:
    parser = _Parser(prog="wellcovered", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=DEFAULT_VERTEX_BUDGET,
                       help="vertex budget (default %(default)s)")
        p.add_argument("--mcap", type=int, default=DEFAULT_M_CAP,
                       help="cap on the certificate retry parameter m")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", help="write primary output to this file")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized subcommands (none yet)")

    c = sub.add_parser("construct", help="build a function graph, emit graph6")
    c.add_argument("-k", type=int, required=True)
    c.add_argument("-q", type=int, required=True)
    c.add_argument("-m", type=int, required=True)
    c.add_argument("--labels", help="write a JSON label sidecar to this file")
    common(c)

    k = sub.add_parser("check", help="run a verifier on a graph6 input file")
    k.add_argument("input", help="graph6 file (first graph line is read)")
    k.add_argument("--mode", required=True,
                   choices=("wellcovered", "property-p", "mt", "indpoly"))
    k.add_argument("-k", type=int, dest="pk")
    k.add_argument("-q", type=int, dest="pq")
    k.add_argument("-m", type=int, dest="pm")
    common(k)

    r = sub.add_parser("realize", help="realize a prescribed tail ordering")
    r.add_argument("-q", type=int, required=True)
    r.add_argument("--pi", required=True,
                   help="tail permutation: image list like 3,2 or JSON map")
    common(r)
    return parser


def _emit(payload, cfg: CliConfig) -> None:
    if cfg.fmt == "json":
        text = json.dumps(payload, indent=2)
    else:
        text = _render_text(payload)
    print(text)


def _render_text(payload, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
        return "\n".join(lines)
    if isinstance(payload, list):
        if all(not isinstance(v, (dict, list)) for v in payload):
            return f"{pad}{', '.join(str(v) for v in payload)}"
        return "\n".join(_render_text(v, indent) for v in payload)
    return f"{pad}{payload}"


def _read_graph(path: str) -> Graph:
    for line in Path(path).read_bytes().splitlines():
        if line.strip():
            return from_graph6(line)
    raise Graph6Error(f"no graph6 line found in {path}")


def _cmd_construct(args, cfg: CliConfig) -> int:
    g = build_function_graph(args.k, args.q, args.m, vertex_budget=cfg.vertex_budget)
    line = to_graph6(g)
    if cfg.out:
        Path(cfg.out).write_bytes(line + b"\n")
    else:
        print(line.decode("ascii"))
    if args.labels:
        sidecar = [[lab.i, list(lab.values)] for lab in g.labels]
        Path(args.labels).write_text(json.dumps(sidecar))
    return EXIT_OK


def _cmd_check(args, cfg: CliConfig, parser: _Parser) -> int:
    g = _read_graph(args.input)
    if args.mode == "indpoly":
        payload = independence_polynomial(g).to_json()
    elif args.mode == "wellcovered":
        payload = is_well_covered(g).to_json()
    elif args.mode == "mt":
        result = binomial_ratio_check(g)
        payload = {"holds": result.holds, "first_violation": result.first_violation}
    else:  # property-p
        if args.pk is None or args.pq is None or args.pm is None:
            parser.error("--mode property-p requires -k, -q and -m")
        payload = check_clique_extension(g, args.pk, args.pq, args.pm).to_json()
    _emit(payload, cfg)
    return EXIT_OK


def _parse_pi(q: int, text: str) -> TailPermutation:
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        return TailPermutation.from_json(q, text)
    return TailPermutation.from_image_list(q, (part for part in text.split(",")))


def _cmd_realize(args, cfg: CliConfig, parser: _Parser) -> int:
    try:
        perm = _parse_pi(args.q, args.pi)
    except (ValueError, json.JSONDecodeError) as exc:
        parser.error(f"invalid --pi: {exc}")
    report = realize(perm, vertex_budget=cfg.vertex_budget, m_cap=cfg.m_cap)
    _emit(report.to_json(), cfg)
    if cfg.out and report.graph is not None:
        Path(cfg.out).write_bytes(to_graph6(report.graph) + b"\n")
    if not report.ordering_verified:
        print("internal failure: ordering not verified on exact counts",
              file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = CliConfig(vertex_budget=args.budget, m_cap=args.mcap,
                        fmt=args.format, out=args.out, seed=args.seed)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if args.command == "construct":
            return _cmd_construct(args, cfg)
        if args.command == "check":
            return _cmd_check(args, cfg, parser)
        return _cmd_realize(args, cfg, parser)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
