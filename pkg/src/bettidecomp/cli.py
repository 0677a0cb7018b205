"""Command-line interface.

Every library capability is exposed as a subcommand with deterministic
output and a three-way exit-code contract:

    0   success / member / pass
    1   checked negative (not in the cone, bound violated, residual nonzero)
    2   usage or parse error

Diagrams are read from a file path or stdin (``-``); the input format is
sniffed (JSON starts with ``{``) unless ``--input-format`` forces it.
``--format json|table`` selects the output flavour and defaults to json
when stdout is a pipe, table on a terminal.  ``BS_DECOMP_MAX_ENUM`` caps
enumeration sizes (default 1000000 chains).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io as dio
from .core import BettiDiagram, hk_residuals, pure_diagram, window_of
from .decompose import greedy_decompose
from .errors import BettiError, NotInCone, ParseError, WindowTooLarge
from .functionals import (
    boundary_facets,
    derived_window,
    expand_in_chain,
    membership_by_inequalities,
    verify_fan_convexity,
)
from .hilbert import hilbert_series, multiplicity_bounds
from .poset import Tableau, Window, chain_from_tableau, count_maximal_chains, maximal_chains

_USAGE_ERROR = 2
_NEGATIVE = 1


def _max_enum() -> int:
    raw = os.environ.get("BS_DECOMP_MAX_ENUM", "")
    try:
        return int(raw) if raw else 1_000_000
    except ValueError:
        return 1_000_000


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_diagram(path: str, forced: str) -> BettiDiagram:
    text = _read_text(path)
    fmt = forced
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "table"
    return dio.parse_diagram(text, fmt)


def _out_format(args) -> str:
    if args.format:
        return args.format
    return "table" if sys.stdout.isatty() else "json"


def _human(value, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(value, list):
        lines = []
        for v in value:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
        return "\n".join(lines) if lines else f"{pad}[]"
    return f"{pad}{value}"


def _print_struct(obj, fmt: str) -> None:
    encoded = dio.encode(obj)
    if fmt == "json":
        import json

        print(json.dumps(encoded, sort_keys=True))
    else:
        print(_human(encoded))


def _print_diagram(b: BettiDiagram, fmt: str) -> None:
    sys.stdout.write(dio.emit_diagram(b, fmt))
    if fmt == "json":
        sys.stdout.write("\n")


def _add_diagram_arg(sub):
    sub.add_argument("diagram", help="path to a diagram file, or - for stdin")
    sub.add_argument(
        "--input-format",
        choices=["auto", "json", "table"],
        default="auto",
        help="force the input format (default: sniff)",
    )


def _add_window_args(sub, with_s=True):
    sub.add_argument("--n", type=int, required=True, help="ambient variable count")
    sub.add_argument("--M", type=int, required=True, help="lowest degree row")
    sub.add_argument("--N", type=int, required=True, help="highest degree row")
    if with_s:
        sub.add_argument("--s", type=int, default=0, help="minimal codimension (default 0)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bettidecomp",
        description="Exact decomposition of Betti diagrams into chains of pure diagrams.",
    )
    parser.add_argument(
        "--format",
        choices=["json", "table"],
        default=None,
        help="output format (default: json on pipes, table on terminals)",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "table"],
        default=argparse.SUPPRESS,
        help="output format (default: json on pipes, table on terminals)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pure", parents=[common], help="print the pure diagram of a degree sequence")
    p.add_argument("--degrees", required=True, help="comma-separated strictly increasing integers")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("decompose", parents=[common], help="greedy chain decomposition of a diagram")
    _add_diagram_arg(p)

    p = sub.add_parser("expand", parents=[common], help="coordinates of a diagram in a chain basis")
    _add_diagram_arg(p)
    p.add_argument("--tableau", required=True, help="JSON file with the numbering matrix")

    p = sub.add_parser("chains", parents=[common], help="enumerate the maximal chains of a window")
    _add_window_args(p)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("facets", parents=[common], help="boundary facets of the fan of a window")
    _add_window_args(p)

    p = sub.add_parser("verify-fan", parents=[common], help="check convexity of the fan of a window")
    _add_window_args(p)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series coefficients of a diagram")
    _add_diagram_arg(p)
    p.add_argument("--truncate", type=int, default=10, help="expansion depth (default 10)")

    p = sub.add_parser("bounds", parents=[common], help="shift bounds and the multiplicity inequality")
    _add_diagram_arg(p)
    p.add_argument("--truncate", type=int, default=None, help="series comparison depth")

    p = sub.add_parser("check-hk", parents=[common], help="Herzog-Kuhl residual vector")
    _add_diagram_arg(p)
    p.add_argument("--s", type=int, required=True, help="number of equations to check")

    p = sub.add_parser("membership", parents=[common], help="cone membership with violation certificate")
    _add_diagram_arg(p)
    return parser


def _cmd_pure(args, fmt):
    try:
        degrees = [int(x) for x in args.degrees.split(",") if x.strip() != ""]
    except ValueError:
        print("--degrees must be comma-separated integers", file=sys.stderr)
        return _USAGE_ERROR
    p = pure_diagram(degrees, args.n)
    _print_diagram(p.betti, fmt)
    return 0


def _cmd_decompose(args, fmt):
    b = _load_diagram(args.diagram, args.input_format)
    try:
        dec = greedy_decompose(b)
    except NotInCone as exc:
        report = {
            "error": "not_in_cone",
            "reason": exc.reason,
            "partial": [[c, list(p.degrees)] for c, p in (exc.partial or ())],
            "residual": exc.residual,
        }
        _print_struct(report, fmt)
        return _NEGATIVE
    if fmt == "json":
        print(dio.emit_decomposition(dec))
    else:
        for c, p in dec.terms:
            print(f"{dio.format_rational(c)} * pi{tuple(p.degrees)}")
    return 0


def _cmd_expand(args, fmt):
    b = _load_diagram(args.diagram, args.input_format)
    import json

    from .errors import InvalidTableau

    try:
        rows = json.loads(_read_text(args.tableau))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid tableau JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    t = Tableau(tuple(tuple(r) for r in rows))
    M, N = window_of(b)
    n = b.n
    if t.shape != (N - M + 1, n + 1):
        print(
            f"error: tableau shape {t.shape} does not match the diagram grid "
            f"{(N - M + 1, n + 1)}",
            file=sys.stderr,
        )
        return _USAGE_ERROR
    # the minimal codimension of the window is encoded in the numbering
    chain = None
    for s_min in range(0, n + 1):
        try:
            chain = chain_from_tableau(t, Window(n, M, N, s_min))
            break
        except InvalidTableau:
            continue
    if chain is None:
        print("error: numbering does not describe a maximal chain", file=sys.stderr)
        return _USAGE_ERROR
    coords = expand_in_chain(b, chain)
    payload = [
        [dio.format_rational(c), list(p.degrees)]
        for c, p in zip(coords, chain.elements)
    ]
    _print_struct(payload, fmt)
    return 0


def _cmd_chains(args, fmt):
    w = Window(args.n, args.M, args.N, args.s)
    cap = _max_enum()
    if args.count_only:
        print(count_maximal_chains(w, cap))
        return 0
    chains = [[list(p.degrees) for p in c.elements] for c in maximal_chains(w, cap)]
    _print_struct(chains, fmt)
    return 0


def _cmd_facets(args, fmt):
    w = Window(args.n, args.M, args.N, args.s)
    payload = [
        {
            "kind": facet.kind,
            "removed": list(facet.removed.degrees),
            "case": facet.functional.case,
            "grid": facet.functional.grid(),
        }
        for facet in boundary_facets(w, _max_enum())
    ]
    _print_struct(payload, fmt)
    return 0


def _cmd_verify_fan(args, fmt):
    w = Window(args.n, args.M, args.N, args.s)
    report = verify_fan_convexity(w, _max_enum())
    _print_struct(report, fmt)
    return 0 if report.passed else _NEGATIVE


def _cmd_hilbert(args, fmt):
    b = _load_diagram(args.diagram, args.input_format)
    h = hilbert_series(b)
    payload = {
        "denominator_power": h.n,
        "numerator": h.numerator,
        "coefficients": h.expand(args.truncate),
    }
    _print_struct(payload, fmt)
    return 0


def _cmd_bounds(args, fmt):
    b = _load_diagram(args.diagram, args.input_format)
    report = multiplicity_bounds(b, args.truncate)
    _print_struct(report, fmt)
    return 0 if report.passed else _NEGATIVE


def _cmd_check_hk(args, fmt):
    b = _load_diagram(args.diagram, args.input_format)
    residuals = hk_residuals(b, args.s)
    payload = {
        "s": args.s,
        "residuals": residuals,
        "satisfied": not any(residuals),
    }
    _print_struct(payload, fmt)
    return 0 if not any(residuals) else _NEGATIVE


def _cmd_membership(args, fmt):
    b = _load_diagram(args.diagram, args.input_format)
    w = derived_window(b)
    result = membership_by_inequalities(b, w, _max_enum())
    payload = {
        "window": w,
        "member": result.member,
    }
    if not result.member:
        payload["certificate"] = {
            "kind": result.violated.kind,
            "removed": list(result.violated.removed.degrees),
            "grid": result.violated.functional.grid(),
            "value": result.value,
        }
    _print_struct(payload, fmt)
    return 0 if result.member else _NEGATIVE


_HANDLERS = {
    "pure": _cmd_pure,
    "decompose": _cmd_decompose,
    "expand": _cmd_expand,
    "chains": _cmd_chains,
    "facets": _cmd_facets,
    "verify-fan": _cmd_verify_fan,
    "hilbert": _cmd_hilbert,
    "bounds": _cmd_bounds,
    "check-hk": _cmd_check_hk,
    "membership": _cmd_membership,
}

#: errors that signal a checked negative rather than bad usage
_NEGATIVE_ERRORS = (NotInCone,)


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else _USAGE_ERROR
    fmt = _out_format(args)
    handler = _HANDLERS[args.command]
    try:
        return handler(args, fmt)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR
    except WindowTooLarge as exc:
        print(f"error: {exc} (raise BS_DECOMP_MAX_ENUM to allow more)", file=sys.stderr)
        return _USAGE_ERROR
    except BettiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR
    except IndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
