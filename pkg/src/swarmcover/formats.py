"""Plain-text point and trace formats.

Whitespace-separated fields, one record per line, '#' starts a comment.
Floats are written with ``repr`` (shortest form that round-trips), so a
format/parse cycle is value-exact. Id tokens parse as int when they look
like one, otherwise stay strings; the same rule applies in both formats
so trace ids match point ids.
"""

import math
from typing import Iterable, Sequence

from .dynamic import DELETE, INSERT, UPDATE, Event
from .grid import Point


class ParseError(ValueError):
    """A malformed line; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _parse_id(token: str):
    try:
        return int(token)
    except ValueError:
        return token


def _parse_float(lineno: int, token: str, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(lineno, f"bad {what} {token!r}") from None
    if not math.isfinite(value):
        raise ParseError(lineno, f"{what} must be finite, got {token!r}")
    return value


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_points(text: str) -> list[Point]:
    """Parse "id x y w" lines; duplicate ids are rejected."""
    points: list[Point] = []
    seen = set()
    for lineno, fields in _records(text):
        if len(fields) != 4:
            raise ParseError(lineno, f"expected 'id x y w', got {len(fields)} fields")
        pid = _parse_id(fields[0])
        x = _parse_float(lineno, fields[1], "x coordinate")
        y = _parse_float(lineno, fields[2], "y coordinate")
        w = _parse_float(lineno, fields[3], "weight")
        if w < 0:
            raise ParseError(lineno, f"weight must be >= 0, got {w!r}")
        if pid in seen:
            raise ParseError(lineno, f"duplicate id {pid!r}")
        seen.add(pid)
        points.append(Point(pid, x, y, w))
    return points


def parse_trace(text: str) -> list[Event]:
    """Parse event lines: "I id x y w", "D id" or "U id w"."""
    events: list[Event] = []
    for lineno, fields in _records(text):
        code = fields[0]
        if code == "I":
            if len(fields) != 5:
                raise ParseError(lineno, "insert needs 'I id x y w'")
            events.append(Event.insert(
                _parse_id(fields[1]),
                _parse_float(lineno, fields[2], "x coordinate"),
                _parse_float(lineno, fields[3], "y coordinate"),
                _parse_float(lineno, fields[4], "weight"),
            ))
        elif code == "D":
            if len(fields) != 2:
                raise ParseError(lineno, "delete needs 'D id'")
            events.append(Event.delete(_parse_id(fields[1])))
        elif code == "U":
            if len(fields) != 3:
                raise ParseError(lineno, "update needs 'U id w'")
            events.append(Event.update(_parse_id(fields[1]), _parse_float(lineno, fields[2], "weight")))
        else:
            raise ParseError(lineno, f"unknown event code {code!r}")
    return events


def format_points(points: Iterable[Point]) -> str:
    return "".join(f"{p.id} {p.x!r} {p.y!r} {p.w!r}\n" for p in points)


def format_trace(events: Sequence[Event]) -> str:
    lines = []
    for e in events:
        if e.kind == INSERT:
            lines.append(f"I {e.id} {e.x!r} {e.y!r} {e.w!r}\n")
        elif e.kind == DELETE:
            lines.append(f"D {e.id}\n")
        elif e.kind == UPDATE:
            lines.append(f"U {e.id} {e.w!r}\n")
        else:
            raise ValueError(f"unknown event kind {e.kind!r}")
    return "".join(lines)
