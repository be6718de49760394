#!/usr/bin/env python3
"""Benchmark the compiled scanners against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--trees N] [--pointers N] [--repeats K]

Parses the same randomly generated corpus with both backends and reports
throughput; also cross-checks that both produce identical results.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import support
from srlkit import _pointers, _sexpr
from srlkit.treebank import render

try:
    from srlkit import _speedups
except ImportError:
    _speedups = None


def best_of(repeats, fn):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def make_corpus(n_trees, n_pointers, seed=20240601):
    rng = random.Random(seed)
    trees = [render(support.random_tree(rng, max_depth=8, max_terminals=40)) for _ in range(n_trees)]
    pointers = []
    for _ in range(n_pointers):
        parts = [f"{rng.randint(0, 80)}:{rng.randint(0, 6)}" for _ in range(rng.randint(1, 3))]
        text = parts[0]
        for part in parts[1:]:
            text += rng.choice("*,;") + part
        pointers.append(text)
    return trees, pointers


def run(name, corpus, pure_fn, fast_fn, repeats):
    pure_time = best_of(repeats, lambda: [pure_fn(s) for s in corpus])
    line = f"{name:<18} pure  {len(corpus) / pure_time:>12,.0f}/s"
    if fast_fn is not None:
        fast_time = best_of(repeats, lambda: [fast_fn(s) for s in corpus])
        line += f"   compiled  {len(corpus) / fast_time:>12,.0f}/s   speedup {pure_time / fast_time:4.1f}x"
    print(line)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trees", type=int, default=5000)
    ap.add_argument("--pointers", type=int, default=200_000)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    trees, pointers = make_corpus(args.trees, args.pointers)
    if _speedups is None:
        print("compiled extension not built; timing the pure backend only")
    else:
        for text in trees[:500]:
            assert _sexpr.parse_node(text) == _speedups.parse_node(text)
        for text in pointers[:5000]:
            assert _pointers.parse_expr_parts(text) == _speedups.parse_expr_parts(text)
        print("backends agree on the generated corpus")

    run("tree parsing", trees, _sexpr.parse_node,
        _speedups.parse_node if _speedups else None, args.repeats)
    run("pointer parsing", pointers, _pointers.parse_expr_parts,
        _speedups.parse_expr_parts if _speedups else None, args.repeats)


if __name__ == "__main__":
    main()
