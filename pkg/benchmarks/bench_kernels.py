"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints one row per workload with the best time for each backend and the
speedup of the compiled one. Results from both backends are checked for
equality before anything is timed.
"""
import argparse
import random
import sys
import timeit

from pioformula import kernels

F1_COEFFS = [-9, 45, -89, 85, -35, -1, 5]
F1_INIT = [-1, 30, 75, 410, 615, 2742, 2387]


def workloads():
    rng = random.Random(1)
    sparse = [3, 0, 0, 0, 0, 0, 0, 1]
    mat = [[rng.randint(-9, 9) for _ in range(12)] for _ in range(12)]
    det = [[rng.randint(-50, 50) for _ in range(24)] for _ in range(24)]
    poly = [rng.randint(-(10**20), 10**20) for _ in range(200)]
    return [
        ("iterate f1, 20k steps", lambda k: k.iterate(F1_COEFFS, F1_INIT, 20_000)),
        ("iterate sparse k=8, 50k steps", lambda k: k.iterate(sparse, list(range(1, 9)), 50_000)),
        ("terms fibonacci, 20k", lambda k: k.terms([1, 1], [1, 1], 20_000)),
        ("matmul 12x12 small ints", lambda k: k.matmul(mat, mat)),
        ("bareiss 24x24", lambda k: k.bareiss_det(det)),
        ("horner deg 200 at 10^12+1", lambda k: k.horner(poly, 10**12 + 1)),
        ("poly_mul 200 x 200", lambda k: k.poly_mul(poly, poly)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only the pure-Python kernels are available", file=sys.stderr)
    names = sorted(backends, reverse=True)
    print(f"{'workload':<32}" + "".join(f"{n + ' (ms)':>16}" for n in names) + f"{'speedup':>10}")
    for label, fn in workloads():
        results = [fn(backends[n]) for n in names]
        if any(r != results[0] for r in results):
            raise SystemExit(f"backends disagree on {label}")
        best = {n: min(timeit.repeat(lambda n=n: fn(backends[n]), number=1, repeat=args.repeat)) for n in names}
        speed = f"{best['python'] / best['cython']:.2f}x" if "cython" in best else "-"
        print(f"{label:<32}" + "".join(f"{best[n] * 1e3:>16.3f}" for n in names) + f"{speed:>10}")


if __name__ == "__main__":
    main()
