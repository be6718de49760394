"""Trace-anchor removal.

Two policies produce surface-true text from treebanked tokens: TreeGuided
drops exactly the tokens sitting under a "-NONE-" preterminal (exact by
construction), PatternOnly drops tokens matching the trace patterns. The
null complementizer "0" is only removed tree-guided, since "0" is a
legitimate numeral elsewhere.
"""

import enum
import re
from dataclasses import dataclass

from srlkit.errors import TreeMismatch

__all__ = [
    "TraceMode",
    "TracePolicy",
    "DEFAULT_PATTERNS",
    "EMPTY_POS",
    "is_trace_token",
    "strip_traces",
]

EMPTY_POS = "-NONE-"

# (a) star-enclosed with optional numeric index: *, *T*-1, *PRO*-2, *U*, *?*
# (b) bare star with numeric index: *-1
DEFAULT_PATTERNS: tuple[re.Pattern, ...] = (
    re.compile(r"\*(?:[^\s]*\*)?(?:-\d+)?\Z"),
    re.compile(r"\*-\d+\Z"),
)


class TraceMode(enum.Enum):
    TREE_GUIDED = "tree"
    PATTERN_ONLY = "pattern"


@dataclass(frozen=True)
class TracePolicy:
    mode: TraceMode
    patterns: tuple[re.Pattern, ...] = DEFAULT_PATTERNS


def is_trace_token(token: str, patterns: tuple[re.Pattern, ...] = DEFAULT_PATTERNS) -> bool:
    """True iff the token matches any trace pattern."""
    return any(p.match(token) for p in patterns)


def strip_traces(tokens, policy: TracePolicy | None = None, tree=None) -> str:
    """Drop trace tokens and join the survivors with single spaces.

    With no explicit policy, the mode is TreeGuided when a tree is given
    and PatternOnly otherwise.
    """
    if policy is None:
        mode = TraceMode.TREE_GUIDED if tree is not None else TraceMode.PATTERN_ONLY
        policy = TracePolicy(mode=mode)
    tokens = list(tokens)
    if policy.mode is TraceMode.TREE_GUIDED:
        if tree is None:
            raise TreeMismatch("tree-guided stripping requires a tree")
        from srlkit.treebank import preterminals

        pres = preterminals(tree)
        if [p.token for p in pres] != tokens:
            raise TreeMismatch("tree leaves do not match the given tokens")
        kept = [p.token for p in pres if p.pos != EMPTY_POS]
    else:
        kept = [t for t in tokens if not is_trace_token(t, policy.patterns)]
    return " ".join(kept)
