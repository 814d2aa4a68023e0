"""Grid-convergence table of the finite-difference sphere operator.

For each (p, m) prints the worst relative error of the lowest k eigenvalues
against the closed-form levels at several grid sizes, the observed order, and
the Richardson-extrapolated error. Pass ``--scheme liouville`` to compare the
point scheme.

    python scripts/oracle_convergence.py --p 10 --m -5 --sizes 500,1000,2000,4000
"""

import argparse
import math

import numpy as np

from monosphere.oracle import discretize_sphere, richardson, solve
from monosphere.spectrum import QuantumNumbers, epsilon


def rel_error(values, exact):
    return float(np.max(np.abs(values - exact) / np.maximum(np.abs(exact), 1.0)))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p", type=int, default=10)
    parser.add_argument("--m", type=int, nargs="+", default=[-10, -5, 0, 5, 10])
    parser.add_argument("--k", type=int, default=5)
    parser.add_argument("--sizes", default="375,750,1500,3000")
    parser.add_argument("--scheme", default="conservative", choices=["conservative", "liouville"])
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"{'m':>4} {'N':>6} {'rel error':>11} {'order':>6}")
    for m in args.m:
        exact = np.array([epsilon(QuantumNumbers(ell, m, args.p)).epsilon for ell in range(args.k)])
        prev = None
        for n in sizes:
            err = rel_error(solve(discretize_sphere(m, args.p, n, args.scheme), args.k).eigenvalues, exact)
            order = "" if prev is None or err == 0 else f"{math.log2(prev / err):6.2f}"
            print(f"{m:>4} {n:>6} {err:11.3e} {order:>6}")
            prev = err
        ext = richardson(lambda n: discretize_sphere(m, args.p, n, args.scheme), sizes[-2], sizes[-1], args.k)
        print(f"{m:>4} {'extrap':>6} {rel_error(ext.eigenvalues, exact):11.3e}")


if __name__ == "__main__":
    main()
