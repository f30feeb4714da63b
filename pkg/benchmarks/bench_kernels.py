#!/usr/bin/env python3
"""Throughput comparison: numba kernels vs the pure-numpy fallback.

Runs each hot kernel on a realistic workload plus one end-to-end generic
initial ideal, timing both implementations in the same process.  The numpy
path is what you get with GINCOMPLEX_NO_NUMBA=1 (or without numba installed).

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from gincomplex import _kernels
from gincomplex.corpus import complete_intersection
from gincomplex.gin import gin
from gincomplex.poly import GLEX, table_for
from gincomplex.rng import SplitMix64

P = 32003


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def reduction_workload(nvars=5, degree=16, nreducers=25, tail_len=400):
    rng = SplitMix64(1)
    tab = table_for(nvars, degree, GLEX)
    vec = np.zeros(len(tab), dtype=np.int64)
    for _ in range(len(tab)):
        vec[rng.below(len(tab))] = rng.below(P)
    leads = sorted({rng.below(len(tab) // 4) for _ in range(nreducers)})
    lead_exps = tab.exps[leads].copy()
    lead_keys = tab.keys[leads].copy()
    tails_k, tails_c, bounds = [], [], [0]
    for lead in leads:
        rows = sorted({lead + 1 + rng.below(len(tab) - lead - 1)
                       for _ in range(tail_len)})
        tails_k.extend(tab.keys[rows].tolist())
        tails_c.extend(rng.field_nonzero(P) for _ in rows)
        bounds.append(len(tails_k))
    return (vec, tab.exps, tab.keys, lead_exps, lead_keys,
            np.array(tails_k, dtype=np.int64),
            np.array(tails_c, dtype=np.int64),
            np.array(bounds, dtype=np.int64), P)


def transvection_workload(nvars=4, degree=30):
    rng = SplitMix64(2)
    tab = table_for(nvars, degree, GLEX)
    vec = np.zeros(len(tab), dtype=np.int64)
    for _ in range(len(tab)):
        vec[rng.below(len(tab))] = rng.below(P)
    c = rng.field_nonzero(P)
    cpow = np.ones(degree + 1, dtype=np.int64)
    for k in range(1, degree + 1):
        cpow[k] = (cpow[k - 1] * c) % P
    binom = np.zeros((degree + 1, degree + 1), dtype=np.int64)
    binom[:, 0] = 1
    for n in range(1, degree + 1):
        for k in range(1, n + 1):
            binom[n, k] = (binom[n - 1, k - 1] + binom[n - 1, k]) % P
    binom_c = (binom * cpow[np.newaxis, :]) % P
    col = np.ascontiguousarray(tab.exps[:, 0])
    wdelta = int(tab.weights[1] - tab.weights[0])
    return vec, col, tab.keys, wdelta, binom_c, P


def rank_workload(rows=400, cols=495):
    rng = SplitMix64(3)
    return np.array([[rng.below(P) for _ in range(cols)]
                     for _ in range(rows)], dtype=np.int64)


def bench_pair(name, njit_fn, numpy_fn, repeat, rows):
    t_np = timeit(numpy_fn, repeat)
    if njit_fn is None:
        rows.append((name, None, t_np))
        return
    njit_fn()  # compile outside the timer
    t_nb = timeit(njit_fn, repeat)
    rows.append((name, t_nb, t_np))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rows = []

    work = reduction_workload()
    vec = work[0]
    rest = work[1:]
    bench_pair(
        "reduce_dense (deg 16, 4845 slots, 25 reducers)",
        (lambda: _kernels._reduce_dense_njit(vec.copy(), *rest))
        if _kernels.HAVE_NUMBA else None,
        lambda: _kernels._reduce_dense_numpy(vec.copy(), *rest),
        args.repeat, rows)

    vec, col, keys, wdelta, binom_c, p = transvection_workload()
    bench_pair(
        "transvect (deg 30, 5456 slots)",
        (lambda: _kernels._transvect_njit(
            vec, np.zeros_like(vec), col, keys, wdelta, binom_c, p))
        if _kernels.HAVE_NUMBA else None,
        lambda: _kernels._transvect_numpy(
            vec, np.zeros_like(vec), col, keys, wdelta, binom_c, p),
        args.repeat, rows)

    mat = rank_workload()
    bench_pair(
        "rank_mod (400 x 495 Macaulay block)",
        (lambda: _kernels._rank_mod_njit(mat.copy(), P))
        if _kernels.HAVE_NUMBA else None,
        lambda: _kernels._rank_mod_numpy(mat.copy(), P),
        args.repeat, rows)

    # end-to-end: swap the dispatch to time a full gin both ways
    ideal = complete_intersection(3, 103)
    saved = (_kernels.reduce_dense, _kernels.transvect, _kernels.rank_mod)

    def run_gin():
        return gin(ideal, GLEX).gin.regularity()

    _kernels.reduce_dense = _kernels._reduce_dense_numpy
    _kernels.transvect = _kernels._transvect_numpy
    _kernels.rank_mod = _kernels._rank_mod_numpy
    t_np = timeit(run_gin, max(1, args.repeat - 1))
    t_nb = None
    if _kernels.HAVE_NUMBA:
        (_kernels.reduce_dense, _kernels.transvect,
         _kernels.rank_mod) = saved
        run_gin()
        t_nb = timeit(run_gin, max(1, args.repeat - 1))
    (_kernels.reduce_dense, _kernels.transvect, _kernels.rank_mod) = saved
    rows.append(("gin of a (2,3) complete intersection, end to end",
                 t_nb, t_np))

    width = max(len(r[0]) for r in rows) + 2
    print(f"{'workload'.ljust(width)}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    for name, t_nb, t_np in rows:
        nb = f"{t_nb * 1e3:.2f}ms" if t_nb is not None else "n/a"
        ratio = f"{t_np / t_nb:.1f}x" if t_nb else "-"
        print(f"{name.ljust(width)}{nb:>12}{t_np * 1e3:>10.2f}ms{ratio:>10}")
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable or disabled; numpy fallback timings only")


if __name__ == "__main__":
    main()
