"""Compare the compiled and pure kernels on realistic workloads.

The inputs are the boundary matrices and GF(2) incidence masks of actual
neighborhood complexes, plus a dense random integer matrix as a stress
case.  Run as a script; prints one row per workload with both timings.

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from nctopo import circulant, neighborhood_complex
from nctopo._kernels import pure
from nctopo.homology import chain_complex

try:
    from nctopo._kernels import _fast
except ImportError:
    _fast = None


def _best_of(fn, repeats=5):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def _boundary_workloads():
    out = []
    for n, s, t in ((40, 3, 5), (36, 1, 11), (30, 2, 9)):
        cc = chain_complex(neighborhood_complex(circulant(n, (s, t))))
        for d, mat in enumerate(cc.boundaries):
            if mat and mat[0]:
                out.append((f"boundary d={d} of N(C_{n}({s},{t})) "
                            f"[{len(mat)}x{len(mat[0])}]", mat))
    return out


def _random_matrix(rows, cols, seed=7):
    rng = random.Random(seed)
    return [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]


def _masks(mat):
    out = []
    for row in mat:
        m = 0
        for j, v in enumerate(row):
            if v % 2:
                m |= 1 << j
        out.append(m)
    return out


def main():
    if _fast is None:
        print("compiled kernel not built; nothing to compare")
        return

    workloads = _boundary_workloads()
    workloads.append(("random 60x80 entries in [-3,3]", _random_matrix(60, 80)))

    print(f"{'workload':52s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, mat in workloads:
        expected = pure.snf_diagonal(mat)
        try:
            got = _fast.snf_diagonal(mat)
        except OverflowError:
            # Entry growth tripped the 64-bit guard; the dispatch wrapper
            # reruns the pure kernel in that case, so just confirm it.
            from nctopo._kernels import snf_diagonal

            assert snf_diagonal(mat) == expected
            tp = _best_of(lambda: pure.snf_diagonal(mat))
            print(f"snf {name:48s} {tp * 1e3:8.2f}ms {'guarded':>10s} {'':>8s}")
            continue
        assert got == expected, f"kernel disagreement on {name}"
        tp = _best_of(lambda: pure.snf_diagonal(mat))
        tc = _best_of(lambda: _fast.snf_diagonal(mat))
        print(f"snf {name:48s} {tp * 1e3:8.2f}ms {tc * 1e3:8.2f}ms {tp / tc:7.1f}x")

    for name, mat in workloads:
        masks = _masks(mat)
        nbits = len(mat[0])
        assert pure.gf2_rank(masks) == _fast.gf2_rank(masks, nbits)
        tp = _best_of(lambda: pure.gf2_rank(masks))
        tc = _best_of(lambda: _fast.gf2_rank(masks, nbits))
        print(f"gf2 {name:48s} {tp * 1e6:8.1f}us {tc * 1e6:8.1f}us {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
