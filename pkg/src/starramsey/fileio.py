"""Plain-text coloring files.

Format: a header line ``p t`` followed by exactly p(p-1)/2 data lines
``u v c`` with 1 <= u < v <= p and 1 <= c <= t, single spaces between
fields.  Lines starting with ``#`` are ignored.  Parsing and
serialization round-trip losslessly; edges are written in lexicographic
order so files diff cleanly.
"""

from __future__ import annotations

from .coloring import EdgeColoring, all_edges
from .errors import ColoringFormatError


def serialize_coloring(coloring: EdgeColoring) -> str:
    lines = [f"{coloring.p} {coloring.t}"]
    for u, v in all_edges(coloring.p):
        lines.append(f"{u} {v} {coloring.colors[(u, v)]}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    """Parse a coloring file, rejecting duplicates, gaps, and range errors
    with the offending line number."""
    p = t = None
    colors: dict = {}
    first_seen: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if p is None:
            if len(fields) != 2:
                raise ColoringFormatError(
                    f"header must be 'p t', got {line!r}", lineno
                )
            try:
                p, t = int(fields[0]), int(fields[1])
            except ValueError:
                raise ColoringFormatError(
                    f"header must hold two integers, got {line!r}", lineno
                ) from None
            if p < 1 or t < 1:
                raise ColoringFormatError(f"need p >= 1 and t >= 1, got p={p}, t={t}", lineno)
            continue
        if len(fields) != 3:
            raise ColoringFormatError(f"edge line must be 'u v c', got {line!r}", lineno)
        try:
            u, v, c = (int(f) for f in fields)
        except ValueError:
            raise ColoringFormatError(
                f"edge line must hold three integers, got {line!r}", lineno
            ) from None
        if not (1 <= u < v <= p):
            raise ColoringFormatError(f"need 1 <= u < v <= {p}, got u={u}, v={v}", lineno)
        if not (1 <= c <= t):
            raise ColoringFormatError(f"color {c} out of range 1..{t}", lineno)
        if (u, v) in colors:
            raise ColoringFormatError(
                f"duplicate edge ({u}, {v}); first seen on line {first_seen[(u, v)]}",
                lineno,
            )
        colors[(u, v)] = c
        first_seen[(u, v)] = lineno
    if p is None:
        raise ColoringFormatError("empty file: missing 'p t' header")
    missing = [e for e in all_edges(p) if e not in colors]
    if missing:
        raise ColoringFormatError(
            f"{len(missing)} edge(s) missing, first is {missing[0]}"
        )
    return EdgeColoring(p, t, colors)


def write_coloring(path: str, coloring: EdgeColoring) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_coloring(coloring))


def read_coloring(path: str) -> EdgeColoring:
    with open(path, "r", encoding="ascii") as fh:
        return parse_coloring(fh.read())
