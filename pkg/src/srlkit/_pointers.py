"""Pointer-expression types and the pure-Python pointer scanner.

A pointer is ``terminal:height`` in canonical decimal (no leading zeros).
An expression is one or more pointers joined by ``*`` (chain) or ``,`` /
``;`` (split). The compiled kernel in _speedups provides the same
``parse_expr_parts`` / ``roundtrip_exhaustive`` contract.
"""

import enum
import re
from dataclasses import dataclass

from srlkit.errors import EmptyFragment, MalformedPointer

_POINTER = re.compile(r"(0|[1-9][0-9]*):(0|[1-9][0-9]*)\Z")
_CONNECTOR = re.compile(r"([*,;])")

CONNECTOR_CHARS = "*,;"


class Connector(enum.Enum):
    """Connector between pointer parts; the value is the source character."""

    CHAIN = "*"
    SPLIT_COMMA = ","
    SPLIT_SEMICOLON = ";"

    @property
    def is_split(self) -> bool:
        return self is not Connector.CHAIN


@dataclass(frozen=True)
class TreePointer:
    """A (terminal ordinal, levels-up) reference into one tree."""

    terminal: int
    height: int

    def format(self) -> str:
        return f"{self.terminal}:{self.height}"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class PointerExpr:
    """Ordered pointer parts with the connectors that joined them."""

    parts: tuple[TreePointer, ...]
    connectors: tuple[Connector, ...] = ()

    def format(self) -> str:
        out = [self.parts[0].format()]
        for conn, part in zip(self.connectors, self.parts[1:]):
            out.append(conn.value)
            out.append(part.format())
        return "".join(out)

    def __str__(self) -> str:
        return self.format()


def parse_expr_parts(text: str) -> tuple[list[tuple[int, int]], list[str]]:
    """Scan a pointer expression into ((terminal, height) pairs, connector chars)."""
    if text == "":
        raise MalformedPointer("empty pointer expression")
    fragments = _CONNECTOR.split(text)
    parts = []
    connectors = []
    for i, frag in enumerate(fragments):
        if i % 2:  # connector slot
            connectors.append(frag)
            continue
        if frag == "":
            raise EmptyFragment(f"empty pointer fragment in {text!r}")
        m = _POINTER.match(frag)
        # 18-digit cap keeps values inside a C long for the compiled kernel
        if m is None or len(m.group(1)) > 18 or len(m.group(2)) > 18:
            raise MalformedPointer(f"bad pointer {frag!r} in {text!r}")
        parts.append((int(m.group(1)), int(m.group(2))))
    return parts, connectors


def format_parts(parts, connectors) -> str:
    out = [f"{parts[0][0]}:{parts[0][1]}"]
    for conn, (t, h) in zip(connectors, parts[1:]):
        out.append(conn)
        out.append(f"{t}:{h}")
    return "".join(out)


def roundtrip_exhaustive(max_terminal: int, max_height: int, max_parts: int):
    """Check parse->format identity over every expression whose parts range
    over terminals 0..max_terminal and heights 0..max_height, with every
    connector combination up to max_parts parts.

    Returns (checked, mismatches, first_bad). Slow; the compiled kernel
    does the same enumeration in C.
    """
    singles = [
        f"{t}:{h}"
        for t in range(max_terminal + 1)
        for h in range(max_height + 1)
    ]
    checked = 0
    mismatches = 0
    first_bad = None

    def check(s: str):
        nonlocal checked, mismatches, first_bad
        checked += 1
        parts, conns = parse_expr_parts(s)
        if format_parts(parts, conns) != s:
            mismatches += 1
            if first_bad is None:
                first_bad = s

    for a in singles:
        check(a)
    if max_parts >= 2:
        for a in singles:
            for c1 in CONNECTOR_CHARS:
                prefix = a + c1
                for b in singles:
                    check(prefix + b)
    if max_parts >= 3:
        for a in singles:
            for c1 in CONNECTOR_CHARS:
                for b in singles:
                    prefix = a + c1 + b
                    for c2 in CONNECTOR_CHARS:
                        prefix2 = prefix + c2
                        for c in singles:
                            check(prefix2 + c)
    if max_parts >= 4:
        raise ValueError("exhaustive enumeration supports at most 3 parts")
    return checked, mismatches, first_bad
