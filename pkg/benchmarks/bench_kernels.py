"""Compare the Cython and numpy kernel backends on representative workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

import numpy as np

from dcyclic import kernels
from dcyclic.example1 import MATRICES


def _workloads():
    rng = np.random.default_rng(0)
    g5 = kernels.backends()["python"].rref(rng.integers(0, 5, size=(8, 16)), 5)[0][:8]
    return [
        ("rref 60x80 over F_7", "rref", (rng.integers(0, 7, size=(60, 80)), 7)),
        ("rref worked-example G1", "rref", (np.array(MATRICES[0]), 7)),
        ("min_weight worked-example G1 (7^5 words)", "min_weight", (np.array(MATRICES[0]), 7)),
        ("min_weight random [16,8] over F_5", "min_weight", (g5, 5)),
        ("span_all worked-example G1", "span_all", (np.array(MATRICES[0]), 7)),
    ]


def _time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    impls = kernels.backends()
    names = sorted(impls)
    print(f"{'workload':40s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, op, fargs in _workloads():
        times = {n: _time(getattr(impls[n], op), fargs, args.repeat) for n in names}
        row = f"{label:40s}" + "".join(f"{times[n] * 1e3:10.3f}ms" for n in names)
        if len(names) == 2:
            row += f"{times['python'] / times['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
