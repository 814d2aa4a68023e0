"""Sphere levels approaching Landau levels as the radius grows at fixed field.

Radii are chosen so the sphere carries an integer number of flux quanta.
Prints the relative gap for each (n, m) and the fitted log-log slope in R.

    python scripts/landau_limit.py --B 1e4 --n-max 3
"""

import argparse

from monosphere.limits import landau_convergence, radii_for_flux
from monosphere.spectrum import PhysicalScale


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--B", type=float, default=1e4, help="field in gauss")
    parser.add_argument("--n-max", type=int, default=2)
    parser.add_argument("--m", type=int, nargs="+", default=[-2, 0, 1, 3])
    parser.add_argument("--flux", default="10,100,1000,10000,100000")
    args = parser.parse_args()

    scale = PhysicalScale.electron(1e-5, args.B)
    flux = [int(f) for f in args.flux.split(",")]
    radii = radii_for_flux(flux, scale)
    print("flux quanta: " + " ".join(f"{p:>9d}" for p in flux))
    print("radius [cm]: " + " ".join(f"{r:9.2e}" for r in radii))
    for n in range(args.n_max + 1):
        for m in args.m:
            recs = landau_convergence(n, m, radii, scale)
            errs = " ".join(f"{r.error:9.2e}" for r in recs)
            print(f"n={n} m={m:>3}: {errs}   slope {recs[0].rate_estimate:+.4f}")


if __name__ == "__main__":
    main()
