#!/usr/bin/env python3
"""Time the hot library paths of topocode on growing inputs."""

import time
from typing import Callable

from topocode.graph import path
from topocode.labelings import Labeling, search_labeling, verify
from topocode.strings import pnbspp_solve, vo_string
from topocode.topcode import from_colored_graph


def timed(fn: Callable[[], object], iterations: int = 3) -> float:
    """Average wall time of fn in milliseconds."""
    times = []
    for _ in range(iterations):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return sum(times) / len(times) * 1000


def graceful_path(n: int) -> Labeling:
    """0, n-1, 1, n-2, ... colors P_n gracefully."""
    return Labeling(tuple(i // 2 if i % 2 == 0 else n - 1 - i // 2 for i in range(n)), kind="set-ordered-graceful")


if __name__ == "__main__":
    print("=" * 70)
    print("BENCHMARK 1: VERIFICATION")
    print("=" * 70)
    for n in (100, 1000, 10000):
        g, f = path(n), graceful_path(n)
        ms = timed(lambda: verify(g, f))
        print(f"P_{n:<6} set-ordered graceful {ms:9.2f} ms")

    print("\n" + "=" * 70)
    print("BENCHMARK 2: GRACEFUL SEARCH ON PATHS")
    print("=" * 70)
    for n in range(4, 11, 2):
        ms = timed(lambda: search_labeling(path(n), "graceful"))
        print(f"P_{n:<6} {ms:9.2f} ms")

    print("\n" + "=" * 70)
    print("BENCHMARK 3: VO STRINGS")
    print("=" * 70)
    for n in (100, 1000, 10000):
        m = from_colored_graph(path(n), graceful_path(n).with_edges(range(n - 1, 0, -1)))
        for algo in ("vo1", "vo2", "vo3", "vo4"):
            ms = timed(lambda: vo_string(m, algo))
            print(f"q = {m.q:<6} {algo} {ms:9.2f} ms")

    print("\n" + "=" * 70)
    print("BENCHMARK 4: PNBSPP")
    print("=" * 70)
    for q in range(2, 6):
        m = from_colored_graph(path(q + 1), graceful_path(q + 1).with_edges(range(q, 0, -1)))
        s = vo_string(m, "vo4").as_digits()
        ms = timed(lambda: pnbspp_solve(s, q), iterations=1)
        print(f"q = {q:<6} {len(s)} digits {ms:9.2f} ms")
