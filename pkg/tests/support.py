"""Test helpers: a seeded random-tree generator and an independent
brute-force selection oracle (explicit parent map, recursive traversal —
deliberately a different mechanism from treebank.select)."""

import random

from srlkit._nodes import Internal, Preterminal

LABELS = ["S", "NP", "VP", "PP", "SBAR", "ADJP", "ADVP", "PRN", "WHNP-1", "NP-SBJ"]
POS_TAGS = ["DT", "NN", "NNS", "VBD", "VBZ", "IN", "JJ", "RB", "CC", "PRP", "NNP", "CD"]
WORDS = [
    "the", "cat", "dog", "ran", "sat", "on", "a", "big", "red", "it",
    "he", "board", "plan", "5", "said", ",", ".", "$", "café", "don't",
]
TRACES = [
    ("-NONE-", "*"),
    ("-NONE-", "*T*-1"),
    ("-NONE-", "*PRO*-2"),
    ("-NONE-", "*-1"),
    ("-NONE-", "*U*"),
]


def random_tree(rng: random.Random, max_depth: int = 8, max_terminals: int = 30,
                with_traces: bool = True):
    """Random well-formed tree; depth and terminal count stay within bounds."""

    def preterminal():
        if with_traces and rng.random() < 0.15:
            return Preterminal(*rng.choice(TRACES))
        return Preterminal(rng.choice(POS_TAGS), rng.choice(WORDS))

    def build(depth: int, budget: int):
        if budget <= 1 or depth >= max_depth or (depth > 0 and rng.random() < 0.3):
            return preterminal(), 1
        k = rng.randint(1, min(4, budget))
        children = []
        used = 0
        for i in range(k):
            reserve = k - i - 1  # keep >= 1 terminal for each remaining sibling
            child, u = build(depth + 1, budget - used - reserve)
            children.append(child)
            used += u
        return Internal(rng.choice(LABELS), tuple(children)), used

    tree, _ = build(0, rng.randint(1, max_terminals))
    return tree


def build_parent_map(tree):
    """(preterminals in order, id-keyed parent map) via recursive traversal."""
    parents = {}
    order = []

    def walk(node):
        if isinstance(node, Preterminal):
            order.append(node)
            return
        for child in node.children:
            parents[id(child)] = node
            walk(child)

    walk(tree)
    return order, parents


def oracle_select_prebuilt(order, parents, index: int, height: int):
    if index < 0 or index >= len(order):
        raise LookupError(f"no terminal {index}")
    node = order[index]
    for _ in range(height):
        if id(node) not in parents:
            raise LookupError("ascent passed the root")
        node = parents[id(node)]
    return node


def oracle_select(tree, index: int, height: int):
    """Ancestor of the index-th preterminal at distance `height`, found by
    walking an explicit id-keyed parent map. Raises LookupError when the
    index is invalid or the ascent passes the root."""
    order, parents = build_parent_map(tree)
    return oracle_select_prebuilt(order, parents, index, height)


def oracle_leaf_count(tree) -> int:
    if isinstance(tree, Preterminal):
        return 1
    return sum(oracle_leaf_count(child) for child in tree.children)
