"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--max-n 24] [--repeat 3]

Times canonical forms (both orientations) over every built triangulation
with k*m <= max-n, and full Kempe closures over those with k*m <= 9.
"""

from __future__ import annotations

import argparse
import time

from tri36 import _kernels_py
from tri36.enumerate import proper_vectors
from tri36.tri import build, nonsingular_coloring

try:
    from tri36 import _kernels as _kernels_cy
except ImportError:
    _kernels_cy = None


def closure(mod, offsets, nbrs, start):
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for col in frontier:
            for other in mod.kempe_neighbors(offsets, nbrs, col):
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    return len(seen)


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=24)
    ap.add_argument("--kempe-max-n", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    graphs = [build(v) for n in range(1, args.max_n + 1) for v in proper_vectors(n).proper]
    csrs = [g.csr() for g in graphs]
    kempe_in = []
    for g in graphs:
        if (g.vertex_count - 2) // 2 <= args.kempe_max_n:
            off, nb = g.csr()
            kempe_in.append((off, nb, _kernels_py.canonical_coloring(bytes(nonsingular_coloring(g).colors))))

    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cython", _kernels_cy))
    else:
        print("compiled kernels unavailable; timing the Python fallback only")

    results = {}
    for name, mod in backends:
        canon = best_of(args.repeat, lambda: [mod.canonical_code(o, nb, r) for o, nb in csrs for r in (False, True)])
        kempe = best_of(args.repeat, lambda: [closure(mod, o, nb, c) for o, nb, c in kempe_in])
        results[name] = (canon, kempe)

    print(f"{len(graphs)} graphs for canonical forms, {len(kempe_in)} for Kempe closures")
    print(f"{'backend':<8} {'canonical (s)':>14} {'kempe (s)':>10}")
    for name, (canon, kempe) in results.items():
        print(f"{name:<8} {canon:>14.4f} {kempe:>10.4f}")
    if "cython" in results:
        (pc, pk), (cc, ck) = results["python"], results["cython"]
        print(f"speedup  {pc / cc:>14.1f}x {pk / ck:>9.1f}x")


if __name__ == "__main__":
    main()
