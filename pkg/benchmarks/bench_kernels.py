"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np
from scipy.optimize import bisect

from nclab import _kernels_py

try:
    from nclab import _kernels
except ImportError:
    _kernels = None

NBAR, R, THETA, AR, AI = 0.1, 0.1, 0.0, 2.0, 0.0
G_INF = 1.0179909406811198


def workloads(mod):
    xs = np.linspace(0.0, 5.0, 1_000_000)
    grid = np.linspace(-8.0, 8.0, 1000)

    def refine():
        g0 = mod.g2_point(NBAR, R, THETA, AR, AI, 0.0, G_INF)
        for _ in range(50):
            bisect(lambda x: abs(g0 - 1) - abs(mod.g2_point(NBAR, R, THETA, AR, AI, x, G_INF) - 1), 2.0, 3.0, xtol=1e-10)

    return {
        "g2_curve 1e6 points": lambda: mod.g2_curve(NBAR, R, THETA, AR, AI, xs, G_INF),
        "qm_curve 1e6 points": lambda: mod.qm_curve(NBAR, R, THETA, AR, AI, xs),
        "p_grid 1000x1000": lambda: mod.p_grid(1.2, 0.9, 0.1, 0.3, -0.2, grid, grid),
        "50 bisections on g2_point": refine,
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = {"python": _kernels_py}
    if _kernels is not None:
        backends["compiled"] = _kernels
    else:
        print("compiled kernels not built; timing the fallback only")
    results = {}
    for name, mod in backends.items():
        for label, fn in workloads(mod).items():
            results[(label, name)] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for label in workloads(_kernels_py):
        row = f"{label:<28}" + "".join(f"{results[(label, b)] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) > 1:
            row += f"{results[(label, 'python')] / results[(label, 'compiled')]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
