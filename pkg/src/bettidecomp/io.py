"""Serialization of diagrams, decompositions, functionals and reports.

Two diagram formats are supported, both exact (rationals travel as strings
like ``"5"`` or ``"-1/6"``, never as floats):

* ``json`` -- an object ``{"n": 3, "entries": [[i, j, "value"], ...]}`` with
  entries sorted by (i, j) on emission; optional ``metadata`` passes through
  parsing untouched.  The schema ships in ``schemas/diagram.schema.json``.

* ``table`` -- the human-readable Betti table.  Each line is
  ``label: v0 v1 ... vn`` where the label is the degree offset ``j - i``,
  columns are the homological indices, and ``-`` marks a zero.  Lines
  starting with ``#`` are comments; ``# n=<int>`` records the ambient size
  (emitted only for positionless diagrams, accepted anywhere).  The grammar
  is documented in ``docs/formats.md``.

Emission is canonical, so equal inputs produce identical bytes and
parse(emit(x)) == x.
"""

from __future__ import annotations

import dataclasses
import json
import re
from enum import Enum
from fractions import Fraction

from .core import BettiDiagram, LaurentPolynomial
from .decompose import Decomposition
from .errors import DuplicateEntry, ParseError
from .functionals import Functional
from .hilbert import HilbertSeries
from .poset import Chain, Tableau, Window

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(token: str) -> Fraction:
    """Exact rational from 'p' or 'p/q'; anything else (floats included) fails."""
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"{token!r} is not an exact rational literal")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"{token!r} has a zero denominator") from None


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value)


def _parse_json_diagram(text: str) -> BettiDiagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise ParseError("diagram document must be an object with 'n' and 'entries'")
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError(f"'n' must be a nonnegative integer, got {n!r}")
    entries = {}
    for item in doc["entries"]:
        if not (isinstance(item, list) and len(item) == 3):
            raise ParseError(f"entry {item!r} must be [i, j, value]")
        i, j, raw = item
        if not isinstance(i, int) or not isinstance(j, int):
            raise ParseError(f"entry indices must be integers, got {item!r}")
        if not isinstance(raw, str):
            raise ParseError(f"entry value must be a rational string, got {raw!r}")
        try:
            value = parse_rational(raw)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        if (i, j) in entries:
            raise DuplicateEntry(f"entry ({i}, {j}) occurs twice")
        entries[(i, j)] = value
    return BettiDiagram(n, entries)


def _parse_table_diagram(text: str) -> BettiDiagram:
    declared_n = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*n\s*=\s*(\d+)\s*$", line)
            if m:
                declared_n = int(m.group(1))
            continue
        if ":" not in line:
            raise ParseError("expected 'label: values'", lineno, 1)
        label_part, _, rest = line.partition(":")
        try:
            label = int(label_part.strip())
        except ValueError:
            raise ParseError(f"bad row label {label_part.strip()!r}", lineno, 1) from None
        tokens = rest.split()
        if not tokens:
            raise ParseError("row has no columns", lineno, len(label_part) + 2)
        rows.append((lineno, label, tokens, raw))
    if not rows:
        if declared_n is None:
            raise ParseError("empty table without a '# n=' line")
        return BettiDiagram(declared_n, {})
    width = len(rows[0][2])
    n = width - 1
    if declared_n is not None and declared_n != n:
        raise ParseError(f"declared n={declared_n} but table has {width} columns")
    labels = [label for _, label, _, _ in rows]
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate row label")
    if labels != list(range(labels[0], labels[0] + len(labels))):
        raise ParseError("row labels must be consecutive integers")
    entries = {}
    for lineno, label, tokens, raw in rows:
        if len(tokens) != width:
            raise ParseError(f"expected {width} columns, found {len(tokens)}", lineno, 1)
        for i, token in enumerate(tokens):
            if token == "-":
                continue
            try:
                value = parse_rational(token)
            except ValueError as exc:
                column = raw.index(token) + 1
                raise ParseError(str(exc), lineno, column) from exc
            if value:
                entries[(i, label + i)] = value
    return BettiDiagram(n, entries)


def parse_diagram(text: str, format: str = "json") -> BettiDiagram:
    """Parse a diagram from ``json`` or ``table`` text."""
    if format == "json":
        return _parse_json_diagram(text)
    if format == "table":
        return _parse_table_diagram(text)
    raise ValueError(f"unknown format {format!r}")


def _emit_json_diagram(b: BettiDiagram) -> str:
    doc = {
        "n": b.n,
        "entries": [[i, j, format_rational(v)] for (i, j), v in b.items()],
    }
    return json.dumps(doc, sort_keys=True)


def _emit_table_diagram(b: BettiDiagram) -> str:
    if b.is_zero:
        return f"# n={b.n}\n"
    offsets = [j - i for i, j in b.support()]
    lo, hi = min(offsets), max(offsets)
    cells = []
    for label in range(lo, hi + 1):
        row = [format_rational(b[(i, label + i)]) if b[(i, label + i)] else "-" for i in range(b.n + 1)]
        cells.append((label, row))
    label_width = max(len(str(label)) for label, _ in cells)
    col_widths = [
        max(len(row[i]) for _, row in cells) for i in range(b.n + 1)
    ]
    lines = []
    for label, row in cells:
        padded = " ".join(val.rjust(col_widths[i]) for i, val in enumerate(row))
        lines.append(f"{str(label).rjust(label_width)}: {padded}")
    return "\n".join(lines) + "\n"


def emit_diagram(b: BettiDiagram, format: str = "json") -> str:
    """Canonical text for a diagram; ``parse_diagram`` round-trips it."""
    if format == "json":
        return _emit_json_diagram(b)
    if format == "table":
        return _emit_table_diagram(b)
    raise ValueError(f"unknown format {format!r}")


def emit_decomposition(dec: Decomposition) -> str:
    """JSON list of [coefficient, degree sequence] pairs, chain order.

    >>> from bettidecomp import BettiDiagram, greedy_decompose
    >>> emit_decomposition(greedy_decompose(BettiDiagram(1, {(0, 0): 2})))
    '[["2", [0]]]'
    """
    payload = [[format_rational(c), list(p.degrees)] for c, p in dec.terms]
    return json.dumps(payload)


def encode(obj):
    """Recursively convert package values into JSON-serializable data.

    Rationals become strings, functionals expose their display grid,
    chains become lists of degree sequences, dataclasses become dicts.
    """
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        raise TypeError("refusing to serialize a float")
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, BettiDiagram):
        return {"n": obj.n, "entries": [[i, j, format_rational(v)] for (i, j), v in obj.items()]}
    if isinstance(obj, Functional):
        return {
            "case": obj.case.value,
            "grid": obj.grid(),
            "window": encode(obj.window),
            "anchor": [None if p is None else list(p.degrees) for p in obj.anchor],
        }
    if isinstance(obj, Chain):
        return [list(p.degrees) for p in obj.elements]
    if isinstance(obj, Tableau):
        return [list(r) for r in obj.rows]
    if isinstance(obj, Window):
        return {"n": obj.n, "M": obj.M, "N": obj.N, "s_min": obj.s_min}
    if isinstance(obj, HilbertSeries):
        return {
            "numerator": [[d, format_rational(v)] for d, v in obj.numerator.items()],
            "denominator_power": obj.n,
        }
    if isinstance(obj, LaurentPolynomial):
        return [[d, format_rational(v)] for d, v in obj.items()]
    if isinstance(obj, Decomposition):
        return json.loads(emit_decomposition(obj))
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {}
        for f in dataclasses.fields(obj):
            out[f.name] = encode(getattr(obj, f.name))
        return out
    if hasattr(obj, "degrees") and hasattr(obj, "n"):  # pure / normalized diagrams
        return list(obj.degrees)
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def emit_report(obj) -> str:
    """Deterministic JSON for any report-like structure."""
    return json.dumps(encode(obj), sort_keys=True)
