"""Row reduction over Z/p: compiled kernel against the numpy back end.

    python3 benchmarks/bench_rref.py [--sizes 60 120 240] [--repeat 5]

Also times the degree-by-degree evaluation matrices of the three fixtures,
which is the shape the implicitization code actually feeds the kernel.
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from ginwb.curves import Parameterization, _grevlex_key
from ginwb.fixtures import fixture_forms
from ginwb.groebner import DEFAULT_MODULUS
from ginwb.kernels import numba_enabled, rref_mod_p
from ginwb.monomial import monomials_of_degree


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def compare(label, mat, p, repeat):
    ref = rref_mod_p(mat, p, backend="numpy")
    got = rref_mod_p(mat, p, backend="numba")
    same = np.array_equal(ref[0], got[0]) and np.array_equal(ref[1], got[1])
    tn = best_of(lambda: rref_mod_p(mat, p, backend="numpy"), repeat)
    tc = best_of(lambda: rref_mod_p(mat, p, backend="numba"), repeat)
    print(f"{label:<28} {str(mat.shape):>12} {tn[0]*1e3:>10.2f} {tc[0]*1e3:>10.2f} {tn[0]/tc[0]:>8.1f}x  {'ok' if same else 'MISMATCH'}")
    return same


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[60, 120, 240])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args()
    if not numba_enabled():
        raise SystemExit("numba is disabled (GINWB_DISABLE_NUMBA) or missing; nothing to compare")

    p = DEFAULT_MODULUS
    rng = np.random.default_rng(args.seed)
    # warm the JIT so compile time is not counted
    rref_mod_p(rng.integers(0, p, (4, 4)), p, backend="numba")

    print(f"{'matrix':<28} {'shape':>12} {'numpy ms':>10} {'numba ms':>10} {'speedup':>9}")
    ok = True
    for n in args.sizes:
        ok &= compare(f"random square n={n}", rng.integers(0, p, (n, n)), p, args.repeat)
        ok &= compare(f"random rank-deficient n={n}", rng.integers(0, p, (n, n // 2)) @ rng.integers(0, 3, (n // 2, n)) % p, p, args.repeat)
    for name in ("aux1", "aux2", "aux3"):
        param = Parameterization.from_forms(fixture_forms(name))
        for k in (4, 6):
            monos = sorted(monomials_of_degree(param.count, k), key=_grevlex_key)
            ok &= compare(f"{name} evaluation, degree {k}", param.evaluation_matrix(k, monos), p, args.repeat)
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
