"""Graph file parsing and writing.

Format: a header line ``n <N>``, then one line per edge ``u v w`` with
1 <= u < v <= N and w a nonzero rational literal such as ``3``, ``-1`` or
``7/2``.  ``#`` starts a comment; blank lines are ignored.  Edge signs are
the signs of the weights.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import GraphParseError
from .sgraph import WeightedSignedGraph


def parse_graph(text: str) -> WeightedSignedGraph:
    n = None
    weighted_edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphParseError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count {parts[1]!r}", lineno)
            if n < 1:
                raise GraphParseError("vertex count must be >= 1", lineno)
            continue
        if len(parts) != 3:
            raise GraphParseError("expected edge line 'u v w'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("vertex labels must be integers", lineno)
        try:
            w = Fraction(parts[2])
        except (ValueError, ZeroDivisionError):
            raise GraphParseError(f"bad weight literal {parts[2]!r}", lineno)
        if w == 0:
            raise GraphParseError("zero weights are not allowed", lineno)
        if not (1 <= u < v <= n):
            raise GraphParseError(
                f"edge ({u},{v}) must satisfy 1 <= u < v <= {n}", lineno
            )
        if (u, v) in seen:
            raise GraphParseError(f"duplicate edge ({u},{v})", lineno)
        seen.add((u, v))
        weighted_edges.append((u, v, w))
    if n is None:
        raise GraphParseError("missing header 'n <count>'", 1)
    return WeightedSignedGraph.from_weighted_edges(n, weighted_edges)


def load_graph(path) -> WeightedSignedGraph:
    return parse_graph(Path(path).read_text())


def format_graph(wg: WeightedSignedGraph, comment: str = "") -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"n {wg.n}")
    for u, v, w in wg.weighted_edges():
        lines.append(f"{u} {v} {w}")
    return "\n".join(lines) + "\n"


def save_graph(wg: WeightedSignedGraph, path, comment: str = "") -> None:
    Path(path).write_text(format_graph(wg, comment))
