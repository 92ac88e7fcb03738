"""Time the compiled kernels against the numpy fallback.

    python bench/bench_kernels.py [--repeat 3] [--rings Z/4 F3[e] M2(F2)]
"""

import argparse
import time

import numpy as np

from pline import kernels
from pline.groups import ge2_generators
from pline.projective import projective_line
from pline.rings import ring


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(R):
    t = R.tables
    args = (t.add, t.mul, t.neg, t.unit, t.commutative)
    pairs = projective_line(R).pairs_array()
    gens = np.array([g.entries for g in ge2_generators(R)], dtype=np.int64)
    return {
        "gl2_codes": lambda b: b.gl2_codes(*args),
        "admissible_mask": lambda b: b.admissible_mask(*args),
        "distant_matrix": lambda b: b.distant_matrix(*args, pairs),
        "group_closure": lambda b: b.group_closure(t.add, t.mul, gens, 10**7),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--rings", nargs="+", default=["Z/8", "F3[e]", "M2(F2)"])
    args = ap.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not available; timing the numpy kernels only")
    header = f"{'ring':<8} {'kernel':<16}" + "".join(f"{name:>12}" for name in backends) + ("   speedup" if len(backends) > 1 else "")
    print(header)
    for name in args.rings:
        R = ring(name)
        for kernel, fn in workloads(R).items():
            row = {b: best_of(lambda: fn(mod), args.repeat) for b, mod in backends.items()}
            line = f"{name:<8} {kernel:<16}" + "".join(f"{row[b] * 1e3:10.2f}ms" for b in backends)
            if len(backends) > 1:
                line += f"  {row['python'] / row['cython']:7.1f}x"
            print(line)


if __name__ == "__main__":
    main()
