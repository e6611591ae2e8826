"""Benchmark the compiled kernels against the pure-Python twins.

Runs the two genuine hot paths -- normal-ordered operator composition and
the exact sparse elimination behind the kernel-dimension reports -- on both
backends and prints the timings side by side.

    python3 benchmarks/bench_core.py
"""

import time

from symdirac._core import pykernels

try:
    from symdirac._core import _ckernels
except ImportError:
    _ckernels = None

from symdirac.operators import dirac, dirac_twist, oscillator, dolbeault
from symdirac.kernel import GradedBasis, operator_matrix
from symdirac.weyl import WeylOperator


def _compose_workload(backend, reps=40):
    n = 3
    a = oscillator(n).compose(dirac(n)) + dolbeault(n)
    b = dirac_twist(n).compose(oscillator(n))
    ta = {k: c.triple() for k, c in a.terms.items()}
    tb = {k: c.triple() for k, c in b.terms.items()}
    t0 = time.perf_counter()
    for _ in range(reps):
        backend.compose_terms(ta, tb, 3 * n)
    return time.perf_counter() - t0


def _elimination_workload(backend):
    n, k, m = 2, 6, 8
    src = GradedBasis(n, k, m)
    mats = [operator_matrix(dirac(n), src, "weighted")[0],
            operator_matrix(dirac_twist(n), src, "weighted")[0]]
    rows = []
    off = 0
    merged = {}
    for mat in mats:
        for (r, c), v in mat.entries.items():
            merged.setdefault(r + off, {})[c] = (v.an, v.bn)
        off += mat.rows
    rows = [row for row in merged.values() if row]
    t0 = time.perf_counter()
    rank = backend.sparse_rank([dict(r) for r in rows], src.size)
    return time.perf_counter() - t0, src.size - rank


def main():
    backends = [("python", pykernels)]
    if _ckernels is not None:
        backends.append(("c", _ckernels))
    else:
        print("compiled backend not available; showing pure-Python numbers only")

    print(f"{'workload':<44}" + "".join(f"{name:>12}" for name, _ in backends))
    times = {name: _compose_workload(mod) for name, mod in backends}
    print(
        f"{'compose: 40 x (O*D_s + D_z) o (Dt_s*O), n=3':<44}"
        + "".join(f"{times[name]:>11.3f}s" for name, _ in backends)
    )
    dims = {}
    etimes = {}
    for name, mod in backends:
        etimes[name], dims[name] = _elimination_workload(mod)
    print(
        f"{'eliminate: joint kernel block (2,6,8) weighted':<44}"
        + "".join(f"{etimes[name]:>11.3f}s" for name, _ in backends)
    )
    assert len(set(dims.values())) == 1, f"backends disagree: {dims}"
    print(f"joint kernel dimension (agreement check): {dims[backends[0][0]]}")
    if _ckernels is not None:
        print(
            "speedup (python/c): "
            f"compose {times['python'] / times['c']:.2f}x, "
            f"eliminate {etimes['python'] / etimes['c']:.2f}x"
        )


if __name__ == "__main__":
    main()
