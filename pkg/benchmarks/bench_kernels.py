"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Every timed call is also checked for identical output across backends.
"""

import argparse
import time

import numpy as np

from msdist import kernels


def _cases(rng):
    n = 60
    D = rng.random((n, n))
    dx, dy = rng.random(n), rng.random(n)
    C = rng.random((80, 80))
    a = rng.integers(0, 4, 200).astype(np.int64)
    b = rng.integers(0, 4, 200).astype(np.int64)
    paths = [rng.integers(0, 5, int(k)).astype(np.int64) for k in rng.integers(1, 8, 60)]
    codes = np.concatenate(paths)
    offs = np.concatenate([[0], np.cumsum([len(p) for p in paths])]).astype(np.int64)
    ox, oy = offs[:31].copy(), offs[30:].copy()
    return {
        "hungarian 80x80": ("hungarian", (C,)),
        "edit 60x60": ("edit_full", (D, dx, dy)),
        "edit light 60x60": ("edit_light", (D, dx, dy)),
        "fp-edit 60x60": ("fp_edit_full", (D, 0.5)),
        "dtw 60x60": ("dtw_full", (D,)),
        "fp-dtw light 60x60": ("fp_dtw_light", (D, 0.5)),
        "lcs 200x200": ("lcs_full", (a, b)),
        "lsp light 200x200": ("lsp_light", (a, b)),
        "lcs matrix 30x30 paths": ("lcs_matrix", (codes, ox, oy)),
    }


def _time(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if kernels.compiled_kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    cases = _cases(np.random.default_rng(args.seed))
    print(f"{'kernel':<26}{'python ms':>12}{'cython ms':>12}{'speedup':>10}  same")
    for label, (name, fargs) in cases.items():
        tp, rp = _time(getattr(kernels.python_kernels, name), fargs, args.repeat)
        tc, rc = _time(getattr(kernels.compiled_kernels, name), fargs, args.repeat)
        same = bool(np.array_equal(np.asarray(rp), np.asarray(rc)))
        print(f"{label:<26}{tp * 1e3:>12.3f}{tc * 1e3:>12.3f}{tp / tc:>9.1f}x  {same}")


if __name__ == "__main__":
    main()
