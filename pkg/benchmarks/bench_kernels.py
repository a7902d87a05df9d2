"""Compare the GMP extension with the pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs under both backends; results are
checked for equality before timings are printed.
"""

import argparse
import random
import time

from implicitize.kernels import _pure

try:
    from implicitize.kernels import _gmp
except ImportError:
    _gmp = None


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def workloads(rng):
    size, nl, npts = 15, 4, 200
    layers = [[[rng.randint(-5, 5) for _ in range(size)] for _ in range(size)]
              for _ in range(nl)]
    points = [[1] + [rng.randint(0, 15) for _ in range(nl - 1)] for _ in range(npts)]
    yield "det_many 15x15, 200 points", lambda k: k.det_many(layers, points)

    big = [[rng.randint(-10 ** 30, 10 ** 30) for _ in range(20)] for _ in range(20)]
    yield "det_int 20x20, 100-bit entries", lambda k: k.det_int(big)

    wide = [[rng.randint(-3, 3) for _ in range(200)] for _ in range(120)]
    yield "rref_int 120x200", lambda k: k.rref_int(wide, 200)
    yield "echelon_pivots 120x200", lambda k: k.echelon_pivots(wide, 200)

    ka = sorted(rng.sample(range(40000), 800))
    ca = [rng.randint(-10 ** 12, 10 ** 12) or 1 for _ in ka]
    kb = sorted(rng.sample(range(30000), 600))
    cb = [rng.randint(-10 ** 12, 10 ** 12) or 1 for _ in kb]
    yield "kron_mul 800 x 600 terms", lambda k: k.kron_mul(ka, ca, kb, cb)
    prod = _pure.kron_mul(ka, ca, kb, cb)
    yield "kron_divexact back to 800 terms", lambda k: k.kron_divexact(*prod, kb, cb)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    if _gmp is None:
        print("GMP extension not built; timing the pure-Python kernels only")
    print(f"{'kernel':34s} {'python':>10s} {'gmp':>10s} {'speedup':>8s}")
    for name, run in workloads(rng):
        t_py, out_py = best_of(lambda: run(_pure), args.repeat)
        if _gmp is None:
            print(f"{name:34s} {t_py:10.4f}")
            continue
        t_gmp, out_gmp = best_of(lambda: run(_gmp), args.repeat)
        if out_py != out_gmp:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:34s} {t_py:10.4f} {t_gmp:10.4f} {t_py / t_gmp:7.1f}x")


if __name__ == "__main__":
    main()
