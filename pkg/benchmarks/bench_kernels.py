"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py [--repeat n]``.  Both backends
are imported directly, so the script does not depend on ``VORTEXLAB_PURE``.
Each row reports the best of ``repeat`` wall-clock timings and checks that
the two backends return the same result.
"""

import argparse
import time

import numpy as np

from vortexlab import _kernels_py

try:
    from vortexlab import _kernels as _compiled
except ImportError:  # pragma: no cover
    _compiled = None


def _best(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def transport_case(n, m, seed=0):
    rng = np.random.default_rng(seed)
    supply = rng.integers(1, 4, n).astype(np.int64)
    demand = np.bincount(rng.integers(0, m, supply.sum()), minlength=m).astype(np.int64)
    cost = rng.uniform(0, 1, (n, m))
    return supply, demand, cost


def tree_case(n, seed=0):
    rng = np.random.default_rng(seed)
    f = rng.normal(size=(n + 1, n + 1))
    inc0 = f[1:] - f[:-1]
    inc1 = f[:, 1:] - f[:, :-1]
    forbid0 = np.zeros_like(inc0, dtype=bool)
    forbid1 = np.zeros_like(inc1, dtype=bool)
    forbid0[n // 2, : n // 2] = True
    return inc0, inc1, forbid0, forbid1


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if _compiled is None:
        print("compiled kernels are not built; only the Python fallback is available")
    print(f"{'kernel':<26}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}  agree")
    cases = []
    for n, m in ((20, 20), (60, 60), (150, 150)):
        args_t = transport_case(n, m)
        cases.append((f"transport_ssp {n}x{m}", "transport_ssp", args_t))
    for n in (64, 256, 512):
        cases.append((f"tree_integrate {n}x{n}", "tree_integrate", tree_case(n) + (0, 0)))
    for label, name, fargs in cases:
        tp, rp = _best(lambda: getattr(_kernels_py, name)(*fargs), args.repeat)
        if _compiled is None:
            print(f"{label:<26}{tp:>12.4f}{'-':>12}{'-':>10}  -")
            continue
        tc, rc = _best(lambda: getattr(_compiled, name)(*fargs), args.repeat)
        agree = abs(rp[0] - rc[0]) < 1e-9 if name == "transport_ssp" else np.allclose(rp[0], rc[0])
        print(f"{label:<26}{tp:>12.4f}{tc:>12.4f}{tp / tc:>10.1f}  {agree}")


if __name__ == "__main__":
    main()
