"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]
"""

import argparse
import time

import numpy as np

from artinlab._kernels import available_backends, get_backend


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cases(quick):
    n = 10**5 if quick else 10**6
    ref = get_backend("python")
    spf, primes = ref.spf_sieve(n)
    small_spf, small_primes = ref.spf_sieve(2 * 10**4 if quick else 10**5)
    return [
        (f"spf_sieve({n})", lambda k: k.spf_sieve(n)),
        (f"mult_tables({n})", lambda k: k.mult_tables(spf)),
        ("power_table(3, 1000003, 1e6)", lambda k: k.power_table(3, 1000003, 10**6)),
        (f"primitive_root_flags(2, pi({n}))", lambda k: k.primitive_root_flags(2, primes, spf)),
        (
            f"na_counts(y=100, pi({len(small_spf) - 1}))",
            lambda k: k.na_counts(small_primes, small_spf, 100),
        ),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="smaller inputs")
    args = parser.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the fallback is available")
    width = 44
    print(f"{'kernel':<{width}}" + "".join(f"{b:>12}" for b in backends) + "     speedup")
    for name, run in cases(args.quick):
        times = [_best(lambda: run(get_backend(b)), args.repeat) for b in backends]
        line = f"{name:<{width}}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[1] / times[0]:>11.1f}x"
        print(line)
    # sanity: both backends agree on the last case
    outs = [np.asarray(cases(True)[-1][1](get_backend(b))) for b in backends]
    assert all(np.array_equal(outs[0], o) for o in outs[1:])


if __name__ == "__main__":
    main()
