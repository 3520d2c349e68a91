"""Command-line entry point: ``copwin <subcommand> ...``.

Exit status is 0 on success, 1 for domain errors (bad graph file, unknown
vertex, malformed ordinal) and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from typing import Optional, Sequence, Tuple

from . import capture, game, symbolic
from .errors import CopwinError
from .graph import Graph, format_graph, generate_graph, read_graph
from .ordinal import format_ordinal, is_limit, is_successor, parse, split


def _value_text(value) -> str:
    return "-" if value is capture.NEVER else str(value)


def _render_matrix(g: Graph, cell) -> str:
    labels = list(g.vertices)
    body = [[_value_text(cell(u, v)) for v in labels] for u in labels]
    first = max(len("robber\\cop"), *(len(u) for u in labels))
    widths = [max(len(v), *(len(row[k]) for row in body)) for k, v in enumerate(labels)]
    lines = [" ".join(["robber\\cop".ljust(first)] + [v.rjust(w) for v, w in zip(labels, widths)])]
    for u, row in zip(labels, body):
        lines.append(" ".join([u.ljust(first)] + [c.rjust(w) for c, w in zip(row, widths)]))
    return "\n".join(lines) + "\n"


def _load(args) -> Graph:
    if args.gen is not None and args.file is not None:
        raise _UsageError("give either a graph file or --gen, not both")
    if args.gen is not None:
        return generate_graph(args.gen)
    if args.file is None:
        raise _UsageError("a graph file or --gen is required")
    try:
        return read_graph(args.file)
    except OSError as exc:
        raise CopwinError(f"cannot read {args.file}: {exc.strerror}") from None


class _UsageError(Exception):
    pass


def _cmd_generate(args, out):
    text = format_graph(generate_graph(args.spec))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def _cmd_analyze(args, out):
    g = _load(args)
    table = capture.compute_capture_table(g)
    eta = capture.eta_of_graph(table)
    theta = capture.theta(table) if table.copwin else None
    if args.json:
        payload = {
            "copwin": table.copwin,
            "rho": table.rho,
            "eta": None if eta is capture.NEVER else eta,
            "theta": theta,
            "vertices": list(g.vertices),
        }
        if args.matrix:
            payload["matrix"] = [
                [None if x is capture.NEVER else x for x in row] for row in table.rows()
            ]
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    out.write(f"copwin={'true' if table.copwin else 'false'}\n")
    out.write(f"rho={table.rho}\n")
    out.write(f"eta={eta}\n")
    out.write("theta=" + ("{" + ", ".join(theta) + "}" if theta is not None else "none") + "\n")
    if args.matrix:
        out.write(_render_matrix(g, table.eta))


def _cmd_simulate(args, out):
    g = _load(args)
    table = capture.compute_capture_table(g)
    trace = game.simulate(g, table, args.robber, args.cop, args.max_rounds, args.robber_policy)
    out.write(game.render_trace(trace))


def _cmd_oracle(args, out):
    g = _load(args)
    values = game.brute_force_table(g)
    out.write(_render_matrix(g, lambda u, v: values[u, v]))


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _cmd_classify(args, out):
    a = parse(args.ordinal)
    limit_part, finite_part = split(a)
    out.write(f"cnf={format_ordinal(a)}\n")
    out.write(f"limit={_flag(is_limit(a))}\n")
    out.write(f"successor={_flag(is_successor(a))}\n")
    out.write(f"split={format_ordinal(limit_part)} + {finite_part}\n")
    out.write(f"in_lambda_T={_flag(symbolic.in_lambda_T(a))}\n")
    out.write(f"in_upsilon={_flag(symbolic.in_upsilon(a))}\n")


def _cmd_family(args, out):
    if args.family == "s":
        spec = symbolic.SFamily(parse(args.alpha))
    elif args.family == "tomega":
        spec = symbolic.TOmega()
    else:
        spec = symbolic.PolatGeneralized(args.i, args.j)
    report = symbolic.family_report(spec)
    out.write(f"eta={'unknown' if report.eta is None else format_ordinal(report.eta)}\n")
    out.write(f"rho={format_ordinal(report.rho)}\n")
    out.write(f"theta={report.theta_description}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="copwin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a generated graph in the text format")
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_generate)

    def graph_source(p):
        p.add_argument("file", nargs="?")
        p.add_argument("--gen", metavar="SPEC")

    p = sub.add_parser("analyze", help="capture values, rho, eta and theta")
    graph_source(p)
    p.add_argument("--matrix", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("simulate", help="play out an optimal-cop game")
    graph_source(p)
    p.add_argument("--robber", required=True)
    p.add_argument("--cop", required=True)
    p.add_argument("--robber-policy", default="optimal")
    p.add_argument("--max-rounds", type=_positive, default=100)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("oracle", help="brute-force game values")
    graph_source(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("classify", help="classify an ordinal")
    p.add_argument("ordinal")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("family", help="closed-form values for an infinite family")
    fam = p.add_subparsers(dest="family", required=True)
    fs = fam.add_parser("s")
    fs.add_argument("--alpha", required=True)
    fam.add_parser("tomega")
    fp = fam.add_parser("polat")
    fp.add_argument("--i", type=_positive, required=True)
    fp.add_argument("--j", type=_positive, default=1)
    p.set_defaults(func=_cmd_family)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "simulate" and args.robber_policy != "optimal":
        policy = args.robber_policy
        if not (policy.startswith("random:") and policy[7:].lstrip("-").isdigit()):
            err.write(f"copwin: error: bad --robber-policy {policy!r}\n")
            return 2
    try:
        args.func(args, out)
    except _UsageError as exc:
        err.write(f"copwin: error: {exc}\n")
        return 2
    except (CopwinError, ValueError) as exc:
        err.write(f"copwin: error: {exc}\n")
        return 1
    return 0


def run(argv: Sequence[str]) -> Tuple[int, str, str]:
    """Run the CLI in-process and return ``(exit_code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
