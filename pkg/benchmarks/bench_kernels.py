"""Compare the compiled and pure-Python completion kernels.

Two tables.  The first completes the saturated generators of a cut ideal
under degrevlex with both backends in one process, checks that bases and
statistics agree, and prints best-of-``--repeat`` wall times.  The second
times the whole toric pipeline (lattice basis, saturation, final basis) in
a fresh subprocess per backend, where the saturation steps dominate.

    python3 benchmarks/bench_kernels.py            # small cases
    python3 benchmarks/bench_kernels.py --large    # adds 32-variable cases (slow in pure Python)
"""

import argparse
import os
import subprocess
import sys
import time

from cutideals import corpus
from cutideals.cuts import cut_exponent_matrix
from cutideals.toric import kernel
from cutideals.toric.binomials import buchberger
from cutideals.toric.ideal import toric_generators
from cutideals.toric.orders import MonomialOrder

SMALL = ("C4", "path3", "C5", "star4", "triangle_edge_C4")
LARGE = ("C4_edge_C4", "C6")


def timed(gens, order, backend, repeat):
    best, gb = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        gb = buchberger(gens, order, backend=backend)
        best = min(best, time.perf_counter() - t)
    return best, gb


PIPELINE = """
import sys, time
from cutideals import corpus
from cutideals.cuts import cut_exponent_matrix
from cutideals.toric.ideal import toric_ideal
m = cut_exponent_matrix(corpus.load(sys.argv[1]))
t = time.perf_counter()
gb = toric_ideal(m)
print(time.perf_counter() - t, len(gb))
"""


def pipeline(name, pure):
    env = dict(os.environ, CUTIDEALS_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", PIPELINE, name], env=env,
                         capture_output=True, text=True, check=True).stdout.split()
    return float(out[0]), int(out[1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--large", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = SMALL + (LARGE if args.large else ())
    if "cython" not in kernel.backends():
        print("compiled kernel not built; only the Python backend is available")
        return
    print(f"{'graph':<18}{'vars':>5}{'basis':>7}{'pairs':>8}{'cython s':>11}{'python s':>11}{'speedup':>9}")
    for name in names:
        m = cut_exponent_matrix(corpus.load(name))
        gens = toric_generators(m)
        order = MonomialOrder.degrevlex(len(m.columns))
        tc, gc = timed(gens, order, "cython", args.repeat)
        tp, gp = timed(gens, order, "python", 1 if name in LARGE else args.repeat)
        strip = lambda st: {k: v for k, v in st.items() if k != "backend"}
        if gc.elements != gp.elements or strip(gc.stats) != strip(gp.stats):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<18}{len(m.columns):>5}{len(gc):>7}{gc.stats['pairs_created']:>8}"
              f"{tc:>11.4f}{tp:>11.4f}{tp / max(tc, 1e-9):>8.1f}x")

    print()
    print(f"{'full pipeline':<18}{'basis':>7}{'cython s':>11}{'python s':>11}{'speedup':>9}")
    for name in names:
        tc, nc = pipeline(name, pure=False)
        tp, np_ = pipeline(name, pure=True)
        if nc != np_:
            raise SystemExit(f"{name}: backends disagree on basis size")
        print(f"{name:<18}{nc:>7}{tc:>11.3f}{tp:>11.3f}{tp / max(tc, 1e-9):>8.1f}x")


if __name__ == "__main__":
    main()
