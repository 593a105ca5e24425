"""Compare the numba and numpy backends on the two hot kernels.

Usage: python benchmarks/bench_backends.py [--sizes 8,16,32,64] [--repeats 5]

Validation scans all n^3 triples of an affine structure; enumeration counts
colorings of the bundled five-generator link over the same structure.  Each
cell is the best wall time of the given repeats, taken after a warmup call
so numba's compilation cost is not charged to the measurement.
"""

import argparse
import math
import time

from singquandles import kernels
from singquandles.corpus import load
from singquandles.formulas import affine_singquandle
from singquandles.presentation import _compile


def _best(fn, repeats):
    fn()  # warmup: first numba call compiles
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(sizes, repeats):
    pres = load("6_11l")
    code, spans, depth_ptr, order, max_stack = _compile(pres)
    rows = []
    for n in sizes:
        t = next(t for t in range(2, n + 1) if math.gcd(t, n) == 1)
        q = affine_singquandle(n, t, 2)
        times = {}
        for name in kernels.available_backends():
            impl = kernels._BACKENDS[name]

            def validate():
                impl["quandle"](q.star, 100)
                impl["sing"](q.star, q.bar, q.r1, q.r2, 100)

            def enumerate_():
                impl["enum"](q.order, len(pres.generators), q.star, q.bar,
                             q.r1, q.r2, code, spans, depth_ptr, order, max_stack)

            times[name] = (_best(validate, repeats), _best(enumerate_, repeats))
        rows.append((n, times))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="8,16,32,64",
                    help="comma-separated structure orders")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    names = kernels.available_backends()
    if len(names) < 2:
        print(f"only {names[0]} available; timings shown without comparison")

    rows = bench(sizes, args.repeats)
    print(f"{'n':>5}  {'kernel':<10}" + "".join(f"{name:>12}" for name in names)
          + ("     speedup" if len(names) == 2 else ""))
    for n, times in rows:
        for i, kernel in enumerate(("validate", "enumerate")):
            cells = [times[name][i] for name in names]
            line = f"{n if not i else '':>5}  {kernel:<10}"
            line += "".join(f"{c * 1e3:>10.3f}ms" for c in cells)
            if len(cells) == 2 and times["numba"][i] > 0:
                line += f"{times['numpy'][i] / times['numba'][i]:>11.1f}x"
            print(line)


if __name__ == "__main__":
    main()
