"""Compare the compiled kernel extension against the pure-Python fallback.

Run as: python benchmarks/bench_kernels.py
"""

import time
from fractions import Fraction

from hyprec._kernels import _fallback
from hyprec.poly import _exact_coeffs, _float_coeffs, _integer_coeffs
from hyprec.recurrence import RecurrenceParams, generate

try:
    from hyprec._kernels import _core
except ImportError:
    _core = None


def _chain_input(n):
    p = generate(RecurrenceParams(1, 1, Fraction(1, 9)), n)[n]
    return _integer_coeffs(_exact_coeffs(p))


def _aberth_input(d):
    # the realistic hot input: a family member outside the hyperbolic
    # regime, where roots are genuinely complex
    p = generate(RecurrenceParams(1, 1, 2), d)[d]
    return _float_coeffs(list(p.coefficients))


def _best_of(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ints = _chain_input(120)
    coeffs = _aberth_input(200)
    jobs = [
        ("sturm_chain deg 120", lambda mod: mod.sturm_chain(ints)),
        ("aberth deg 200", lambda mod: mod.aberth_roots(coeffs)),
    ]
    print(f"{'kernel':<22}{'fallback':>12}{'compiled':>12}{'speedup':>10}")
    for name, job in jobs:
        t_fb = _best_of(lambda: job(_fallback))
        if _core is None:
            print(f"{name:<22}{t_fb:>11.4f}s{'n/a':>12}{'n/a':>10}")
            continue
        t_c = _best_of(lambda: job(_core))
        print(f"{name:<22}{t_fb:>11.4f}s{t_c:>11.4f}s{t_fb / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
