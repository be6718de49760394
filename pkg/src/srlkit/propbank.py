"""Proposition (`.prop`) line parsing.

Each line is whitespace-separated: a file path, a tree ordinal, the
predicate's terminal ordinal, then metadata and role annotations. Role
fields are recognized purely by suffix: anything ending in -ARG0, -ARG1,
or -rel (case-insensitive, split at the last dash) contributes its prefix
as a pointer expression; every other field is ignored.
"""

import enum
from dataclasses import dataclass, field

from srlkit._backend import parse_expr_parts
from srlkit._pointers import Connector, PointerExpr, TreePointer, parse_expr_parts as _pure_parts
from srlkit.errors import MalformedLine, MalformedPointer

__all__ = [
    "Connector",
    "PointerExpr",
    "TreePointer",
    "RoleLabel",
    "Proposition",
    "parse_pointer",
    "parse_pointer_expr",
    "parse_prop_line",
    "parse_prop_file",
    "sort_propositions",
]


class RoleLabel(enum.Enum):
    ARG0 = "ARG0"
    ARG1 = "ARG1"
    REL = "REL"

    @classmethod
    def from_suffix(cls, suffix: str):
        """Match an annotation-field suffix, case-insensitively; None if other."""
        up = suffix.upper()
        if up in ("ARG0", "ARG1", "REL"):
            return cls(up)
        return None


@dataclass
class Proposition:
    """One predicate instance from a `.prop` line."""

    file_id: str
    tree_index: int
    predicate_terminal: int
    roles: dict[RoleLabel, list[PointerExpr]] = field(default_factory=dict)
    raw_line: str = ""
    line_no: int = 0

    def exprs(self, label: RoleLabel) -> list[PointerExpr]:
        return self.roles.get(label, [])


def parse_pointer(text: str) -> TreePointer:
    """Parse a single `terminal:height` pointer."""
    parts, connectors = _pure_parts(text)
    if connectors:
        raise MalformedPointer(f"connector in plain pointer {text!r}")
    return TreePointer(*parts[0])


_CONNECTOR_BY_CHAR = {c.value: c for c in Connector}


def parse_pointer_expr(text: str) -> PointerExpr:
    """Parse a chain/split pointer expression, preserving connector kinds."""
    parts, connectors = parse_expr_parts(text)
    return PointerExpr(
        tuple(TreePointer(t, h) for t, h in parts),
        tuple(_CONNECTOR_BY_CHAR[c] for c in connectors),
    )


def parse_prop_line(line: str, line_no: int = 0) -> Proposition:
    """Parse one proposition line; unrecognized fields are ignored."""
    fields = line.split()
    if len(fields) < 3:
        raise MalformedLine(f"expected at least 3 fields, got {len(fields)}: {line!r}")
    try:
        tree_index = int(fields[1])
        predicate_terminal = int(fields[2])
    except ValueError as exc:
        raise MalformedLine(f"non-integer index in {line!r}: {exc}") from None
    if tree_index < 0 or predicate_terminal < 0:
        raise MalformedLine(f"negative index in {line!r}")
    roles: dict[RoleLabel, list[PointerExpr]] = {}
    for f in fields[3:]:
        prefix, dash, suffix = f.rpartition("-")
        if not dash:
            continue
        label = RoleLabel.from_suffix(suffix)
        if label is None:
            continue
        try:
            expr = parse_pointer_expr(prefix)
        except MalformedPointer as exc:
            raise MalformedPointer(f"field {f!r}: {exc}") from None
        roles.setdefault(label, []).append(expr)
    return Proposition(
        file_id=fields[0],
        tree_index=tree_index,
        predicate_terminal=predicate_terminal,
        roles=roles,
        raw_line=line,
        line_no=line_no,
    )


def parse_prop_file(text: str) -> list[Proposition]:
    """Parse every non-blank line of a `.prop` file, keeping line numbers."""
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            out.append(parse_prop_line(line, line_no=i))
    return out


def sort_propositions(props: list[Proposition]) -> list[Proposition]:
    """Stable sort by (tree_index, predicate_terminal)."""
    return sorted(props, key=lambda p: (p.tree_index, p.predicate_terminal))
