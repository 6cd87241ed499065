#!/usr/bin/env python3
"""Benchmark: compiled vs pure-Python ground countermodel search.

Runs the same randomly generated ground-equation workload through both
engines and prints a comparison table. The compiled twin is built by
`pip install -e .` when Cython is available.
"""

from __future__ import annotations

import random
import statistics
import time

from foundry.fol import App, congruence_closure, const, single_sorted, Sort
from foundry.fol.groundsearch import _lower, _search_py

try:
    from foundry._groundsearch import search as _search_c
except ImportError:
    _search_c = None

OBJ = Sort("obj")


def gen_problem(rng: random.Random):
    consts = [const(c) for c in "abcd"[: rng.randrange(2, 5)]]
    fns = ["f", "g"][: rng.randrange(1, 3)]

    def term(depth):
        if depth <= 0 or rng.random() < 0.4:
            return rng.choice(consts)
        return App(rng.choice(fns), (term(depth - 1),))

    eqs = [(term(2), term(2)) for _ in range(rng.randrange(1, 6))]
    goal = (term(3), term(3))
    return eqs, goal


def run(engine, workload, k: int) -> float:
    t0 = time.perf_counter()
    for nodes, checks in workload:
        for size in range(1, k + 1):
            if engine(nodes, checks, size) is not None:
                break
    return time.perf_counter() - t0


def main() -> None:
    rng = random.Random(20240601)
    problems = [gen_problem(rng) for _ in range(2000)]
    workload = [_lower(eqs, goal)[:2] for eqs, goal in problems]

    engines = [("pure-python", _search_py)]
    if _search_c is not None:
        engines.append(("compiled", _search_c))
    else:
        print("compiled twin not built; showing pure python only")

    print(f"{len(workload)} ground problems, universes up to size 4\n")
    print(f"{'engine':>12} {'total (s)':>10} {'per problem (us)':>18}")
    results = {}
    for name, engine in engines:
        times = [run(engine, workload, 4) for _ in range(3)]
        best = min(times)
        results[name] = best
        print(f"{name:>12} {best:>10.3f} {best / len(workload) * 1e6:>18.1f}")
    if len(results) == 2:
        speedup = results["pure-python"] / results["compiled"]
        print(f"\nspeedup: {speedup:.1f}x")
    # sanity: the engines agree with each other and with congruence closure
    rng2 = random.Random(7)
    for _ in range(200):
        eqs, goal = gen_problem(rng2)
        nodes, checks, _terms = _lower(eqs, goal)
        verdict = congruence_closure(eqs, goal).valid
        found_py = any(_search_py(nodes, checks, s) is not None for s in range(1, 5))
        if verdict:
            assert not found_py  # entailed goals admit no countermodel
        if _search_c is not None:
            found_c = any(_search_c(nodes, checks, s) is not None for s in range(1, 5))
            assert found_c == found_py
    print("agreement check: ok")


if __name__ == "__main__":
    main()
