"""Constituency-tree node types.

Kept in a leaf module so both the pure-Python and the compiled parser can
build the same objects. Nodes are immutable by convention: nothing in the
toolkit mutates them after construction, so they are safe to share across
threads.
"""


class Preterminal:
    """A POS-labeled node holding exactly one surface token."""

    __slots__ = ("pos", "token")

    def __init__(self, pos: str, token: str):
        self.pos = pos
        self.token = token

    def __eq__(self, other):
        return (
            isinstance(other, Preterminal)
            and self.pos == other.pos
            and self.token == other.token
        )

    def __hash__(self):
        return hash((self.pos, self.token))

    def __repr__(self):
        return f"Preterminal({self.pos!r}, {self.token!r})"


class Internal:
    """A labeled node with an ordered, non-empty tuple of child nodes."""

    __slots__ = ("label", "children")

    def __init__(self, label: str, children: tuple):
        self.label = label
        self.children = children

    def __eq__(self, other):
        return (
            isinstance(other, Internal)
            and self.label == other.label
            and self.children == other.children
        )

    def __hash__(self):
        return hash((self.label, self.children))

    def __repr__(self):
        return f"Internal({self.label!r}, {self.children!r})"
