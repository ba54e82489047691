"""Compare the numba and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--max-power 6]

Times each kernel on exponent matrices taken from powers of the six-variable
example ideal, then the end-to-end decomposition of those powers with each
backend swapped in.  The first numba call per kernel (JIT compile or cache
load) is excluded.
"""

import argparse
import time

import numpy as np

from assinf import _kernels
from assinf.core import Ambient, _canonical, power
from assinf.decomposition import irreducible_decomposition


def example_ideal():
    A = Ambient(tuple("abcdef"))
    m = A.monomial
    return A.ideal(m(a=3, b=2, e=1), m(b=1, c=3, d=1), m(b=4, d=1, e=2, f=1), m(a=1, b=2, c=1, f=3))


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_inputs(I, s):
    G = power(I, s).matrix
    prev = power(I, s - 1).matrix if s > 1 else I.matrix
    raw = (prev[:, None, :] + I.matrix[None, :, :]).reshape(-1, G.shape[1])
    # unsorted product rows, canonicalised up to the minimality filter
    deg = raw.sum(axis=1)
    raw = np.unique(raw[np.lexsort(np.vstack([-raw[:, ::-1].T, deg]))], axis=0)
    raw = np.ascontiguousarray(raw[np.argsort(raw.sum(axis=1), kind="stable")])
    probes = np.ascontiguousarray(G + np.eye(G.shape[1], dtype=np.int64)[np.arange(len(G)) % G.shape[1]])
    bounds = np.ascontiguousarray(_canonical(np.maximum(G[:, None, :], G[None, ::-1, :]).reshape(-1, G.shape[1]) % 7))
    return raw, G, probes, np.unique(bounds, axis=0)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--max-power", type=int, default=6)
    args = ap.parse_args()

    if _kernels.numba_impl is None:
        raise SystemExit("numba is not installed; nothing to compare")

    I = example_ideal()
    impls = {"numba": _kernels.numba_impl, "numpy": _kernels.numpy_impl}
    print(f"{'s':>2} {'kernel':<16} {'rows':>7} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for s in range(1, args.max_power + 1):
        raw, G, probes, bounds = kernel_inputs(I, s)
        cases = {
            "minimal_mask": (lambda impl: impl.minimal_mask(raw), len(raw)),
            "covered_mask": (lambda impl: impl.covered_mask(G, probes), len(probes)),
            "containing_mask": (lambda impl: impl.containing_mask(bounds), len(bounds)),
        }
        for name, (call, rows) in cases.items():
            a = call(impls["numba"])  # warm-up / compile
            b = call(impls["numpy"])
            assert np.array_equal(a, b), name
            t_nb = best_of(lambda: call(impls["numba"]), args.repeat)
            t_np = best_of(lambda: call(impls["numpy"]), args.repeat)
            print(f"{s:>2} {name:<16} {rows:>7} {t_nb * 1e3:>10.3f} {t_np * 1e3:>10.3f} {t_np / t_nb:>7.1f}x")

    print()
    print(f"{'s':>2} {'decompose I^s':<16} {'comps':>7} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    saved = _kernels._impl
    try:
        for s in range(1, args.max_power + 1):
            Is = power(I, s)
            times = {}
            for name, impl in impls.items():
                _kernels._impl = impl
                comps = len(irreducible_decomposition(Is))
                times[name] = best_of(lambda: irreducible_decomposition(Is), max(1, args.repeat // 2))
            print(f"{s:>2} {'':<16} {comps:>7} {times['numba'] * 1e3:>10.1f} {times['numpy'] * 1e3:>10.1f} "
                  f"{times['numpy'] / times['numba']:>7.1f}x")
    finally:
        _kernels._impl = saved


if __name__ == "__main__":
    main()
