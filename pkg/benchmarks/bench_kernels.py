"""Time the compiled search kernel against the pure-Python one.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both kernels run the same workloads; node counts must match, so the ratio
of times is a fair per-node speed comparison.
"""

import argparse
import statistics
import time

from unionint import _backend
from unionint.search import max_family_upset, max_uniform_family, max_uniform_l_intersecting
from unionint.setcore import ProblemSpec

WORKLOADS = [
    ("upset st(5,2,2)", lambda k: max_family_upset(ProblemSpec.st(5, 2, 2), kernel=k)),
    ("upset union-l(5,1)", lambda k: max_family_upset(ProblemSpec.union_l(5, 1), kernel=k)),
    ("upset st(6,1,1)", lambda k: max_family_upset(ProblemSpec.st(6, 1, 1), allow_n6=True, kernel=k)),
    ("upset st(6,1,3)", lambda k: max_family_upset(ProblemSpec.st(6, 1, 3), allow_n6=True, kernel=k)),
    ("uniform(7,2,2,2) exhaustive", lambda k: max_uniform_family(ProblemSpec.uniform(7, 2, 2, 2), exhaustive=True, kernel=k)),
    ("uniform(8,2,1,2) b&b", lambda k: max_uniform_family(ProblemSpec.uniform(8, 2, 1, 2), kernel=k)),
    ("3-uniform 1-intersecting n=7", lambda k: max_uniform_l_intersecting(7, 3, 1, kernel=k)),
]
QUICK = {"upset st(5,2,2)", "upset union-l(5,1)", "uniform(7,2,2,2) exhaustive"}


def best_time(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), statistics.median(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="only the short workloads")
    args = ap.parse_args()
    kernels = sorted(_backend.available_backends())
    if "cython" not in kernels:
        print("compiled kernel not built; only timing the Python kernel")
    print(f"{'workload':32} {'nodes':>10} " + " ".join(f"{k + ' (s)':>12}" for k in kernels) + "   speedup")
    for name, fn in WORKLOADS:
        if args.quick and name not in QUICK:
            continue
        row, nodes = {}, set()
        for k in kernels:
            best, _, res = best_time(lambda: fn(k), args.repeat)
            row[k] = best
            nodes.add((res.optimum, res.nodes))
        if len(nodes) != 1:
            raise SystemExit(f"{name}: kernels disagree {nodes}")
        (opt, count), = nodes
        speed = f"{row['python'] / row['cython']:8.1f}x" if "cython" in row else "       -"
        print(f"{name:32} {count:>10} " + " ".join(f"{row[k]:12.4f}" for k in kernels) + f"  {speed}")


if __name__ == "__main__":
    main()
