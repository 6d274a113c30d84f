"""Benchmark the compiled tableau kernel against the pure-Python fallback.

Run with:  python3 benchmarks/bench_kernel.py
"""

import time

from kschub import _svt_py, kernel
from kschub.shapes import partition, star

CASES = [
    ("G(3,2,1) monomials, 4 vars", "signed", ((0, 0, 0), (3, 2, 1), 4, 6)),
    ("G(4,3,2,1) monomials, 4 vars", "signed", ((0, 0, 0, 0), (4, 3, 2, 1), 4, 10)),
    ("LR (3,2,1)*(3,2,1)", "contents", None),
    ("LR (4,3,1)*(2,2,1)", "contents", None),
]


def lr_args(lam, mu):
    s = star(partition(lam), partition(mu))
    bounds = s.row_bounds()
    offsets = tuple(a for a, b in bounds)
    widths = tuple(b - a for a, b in bounds)
    return offsets, widths, len(lam) + len(mu)


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    print(f"selected kernel: {kernel.IMPLEMENTATION}")
    rows = []
    for name, mode, args in CASES:
        if mode == "signed":
            fast = (kernel.signed_monomial_counts, args)
            slow = (_svt_py.signed_monomial_counts, args)
        else:
            lam, mu = (
                ((3, 2, 1), (3, 2, 1)) if "(3,2,1)*" in name else ((4, 3, 1), (2, 2, 1))
            )
            a = lr_args(lam, mu)
            fast = (kernel.content_counts, a)
            slow = (_svt_py.content_counts, a)
        t_fast, r_fast = timed(*[fast[0]], *fast[1])
        t_slow, r_slow = timed(*[slow[0]], *slow[1])
        assert dict(r_fast) == dict(r_slow), f"kernel mismatch on {name}"
        rows.append((name, t_fast, t_slow))
    width = max(len(r[0]) for r in rows)
    print(f"{'case'.ljust(width)}  selected    pure        speedup")
    for name, t_fast, t_slow in rows:
        ratio = t_slow / t_fast if t_fast else float("inf")
        print(f"{name.ljust(width)}  {t_fast:9.4f}s  {t_slow:9.4f}s  {ratio:6.1f}x")


if __name__ == "__main__":
    main()
