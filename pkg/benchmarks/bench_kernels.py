"""Compare the compiled and NumPy modular charpoly kernels.

    python3 benchmarks/bench_kernels.py --graphs petersen shrikhande --repeat 3
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from qwspectra import named, walks
from qwspectra.charpoly import charpoly_exact, primes
from qwspectra.kernels import BACKENDS

MATRICES = {
    "grover": walks.grover,
    "u-plus": walks.u_plus,
    "u3-plus": walks.u3_plus,
}


def time_call(fn, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", nargs="+", default=["petersen", "heawood", "shrikhande"])
    ap.add_argument("--matrices", nargs="+", default=list(MATRICES), choices=list(MATRICES))
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    print(f"backends: {', '.join(BACKENDS)}")
    header = f"{'graph':<12} {'matrix':<8} {'size':>5}  " + "  ".join(f"{b:>10}" for b in BACKENDS)
    print(header + "   single-prime kernel (ms)")
    p = primes(1)[0]
    for name in args.graphs:
        g = named.by_name(name)
        for kind in args.matrices:
            m = MATRICES[kind](g)
            re, im = m.numerators()
            re64 = np.asarray(re, dtype=np.int64) % p
            full = {b: time_call(lambda fn=fn: charpoly_exact(m, backend=fn), args.repeat)
                    for b, fn in BACKENDS.items()}
            single = {b: time_call(lambda fn=fn: fn(re64, None, p), args.repeat)
                      for b, fn in BACKENDS.items()}
            polys = {charpoly_exact(m, backend=fn) for fn in BACKENDS.values()}
            assert len(polys) == 1, "backends disagree"
            cells = "  ".join(f"{full[b]:>9.3f}s" for b in BACKENDS)
            kern = ", ".join(f"{b}={single[b] * 1e3:.1f}" for b in BACKENDS)
            print(f"{name:<12} {kind:<8} {m.rows:>5}  {cells}   {kern}")


if __name__ == "__main__":
    main()
