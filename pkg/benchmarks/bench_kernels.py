"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from rectcap import _pykernels

try:
    from rectcap import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("words n=8 k=4 2x2", "hist_words", (8, 1, 4, 2, 2)),
    ("words n=10 k=3 1x3", "hist_words", (10, 1, 3, 1, 3)),
    ("catalan n=11 2x1", "hist_catalan", (11, 2, 1)),
    ("perms n=7 2x2", "hist_perms", (7, 2, 2)),
]


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels are not built; only the Python timings are shown")
    print(f"{'case':<22}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for label, name, fargs in CASES:
        tp, outp = best_of(getattr(_pykernels, name), fargs, args.repeat)
        if _ckernels is None:
            print(f"{label:<22}{tp:>10.3f}{'-':>10}{'-':>9}")
            continue
        tc, outc = best_of(getattr(_ckernels, name), fargs, args.repeat)
        same = [list(h) for h in outc] == [list(h) for h in outp] if name == "hist_catalan" else list(outc) == list(outp)
        if not same:
            raise SystemExit(f"{label}: backends disagree")
        print(f"{label:<22}{tp:>10.3f}{tc:>10.4f}{tp / tc:>8.0f}x")


if __name__ == "__main__":
    main()
