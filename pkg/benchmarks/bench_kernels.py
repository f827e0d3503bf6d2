"""Time the numba kernels against their numpy counterparts.

    python benchmarks/bench_kernels.py [--max-c 10000] [--repeat 3]

Both paths are called directly, so the env flag does not matter here.  The
numba column excludes compilation (one warm-up call first).
"""
import argparse
import time

import numpy as np

from pythgen import kernels


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def scan_all(scan, rows):
    for a, b, c in rows:
        scan(c, a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-c", type=int, default=10_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    n = args.max_c

    rows = kernels.all_triples(n).tolist()[:2000]
    cases = [
        ("primitive_triples", lambda: kernels.primitive_triples_numpy(n),
         lambda: kernels._primitive_triples_nb(np.int64(n))),
        ("all_triples (expand)",
         lambda: kernels.expand_multiples_numpy(kernels.primitive_triples_numpy(n), n),
         lambda: kernels._expand_multiples_nb(kernels._primitive_triples_nb(np.int64(n)), np.int64(n))),
        ("brute_force_triples", lambda: kernels.brute_force_triples_numpy(n, False),
         lambda: kernels._brute_force_triples_nb(np.int64(n), False)),
        ("squarefree_parts (100*max-c)", lambda: kernels.squarefree_parts_numpy(100 * n),
         lambda: kernels._squarefree_parts_nb(np.int64(100 * n))),
        (f"integer_pair_scan x{len(rows)}", lambda: scan_all(kernels.integer_pair_scan_numpy, rows),
         lambda: scan_all(kernels._integer_pair_scan_nb, rows)),
    ]

    print(f"max-c {n}, best of {args.repeat}")
    print(f"{'kernel':<32} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for name, np_fn, nb_fn in cases:
        t_np = best_of(np_fn, args.repeat)
        if kernels.HAS_NUMBA:
            nb_fn()
            t_nb = best_of(nb_fn, args.repeat)
            print(f"{name:<32} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{name:<32} {t_np:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
