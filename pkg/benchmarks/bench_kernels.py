"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

from eulerprod import _pykernels

try:
    from eulerprod import _ckernels
except ImportError:
    _ckernels = None

CASES = {
    "stepped_product n=150": lambda k: k.stepped_product(1.5, 0.5, 1, 0, 150),
    "stepped_log_sum n=1e5": lambda k: k.stepped_log_sum(1.5, 0.5, 2, 1, 10**5),
    "ratio_product N=1e4": lambda k: k.ratio_product(1.0, 3.0, 2.0, 2.0, 2.0, 10**4, 10**4),
    "ratio_product N=1e5 (log)": lambda k: k.ratio_product(1.0, 3.0, 2.0, 2.0, 2.0, 10**5, 10**4),
    "alternating_ratio N=2e5": lambda k: k.alternating_ratio_product(1.0, 2.0, 2.0, 2 * 10**5, 2 * 10**4),
    "de_beta_level h=1/64": lambda k: k.de_beta_level(0.5, 0.5, 1 / 64, 600, False),
}


def best_time(fn, kernels, repeat):
    timer = timeit.Timer(lambda: fn(kernels))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is timed")
    print(f"{'kernel':28s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name, fn in CASES.items():
        py = best_time(fn, _pykernels, args.repeat)
        if _ckernels is None:
            print(f"{name:28s} {py * 1e3:10.3f}ms {'-':>12s} {'-':>8s}")
            continue
        cy = best_time(fn, _ckernels, args.repeat)
        assert fn(_pykernels) == fn(_ckernels), name
        print(f"{name:28s} {py * 1e3:10.3f}ms {cy * 1e3:10.3f}ms {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
