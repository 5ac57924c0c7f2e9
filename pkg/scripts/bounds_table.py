"""Print the width bracket, the Weyl-Nagy/Poisson forms and the exact deviation side by side.

    python scripts/bounds_table.py --n-max 8
"""

import argparse
import math

from widthlab import width_bounds as wb
from widthlab.psi_seq import ExpPoly, Geometric, Power


def specialised(psi, n):
    try:
        if isinstance(psi, Power):
            w = wb.weyl_nagy_report(psi.r, n)
            return w.lower, w.upper
        if isinstance(psi, ExpPoly):
            p = wb.poisson_report(psi.alpha, psi.r, n)
            return p.lower, p.upper
    except wb.PreconditionError:
        pass
    return math.nan, math.nan


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=6)
    args = parser.parse_args()
    for psi in [Geometric(0.5), Power(2.0), Power(5.0), ExpPoly(1.0, 2.0), ExpPoly(0.5, 1.5)]:
        print(psi.label())
        print(f"  {'n':>3} {'lower':>12} {'psi(n)/sqrt(pi)':>16} {'upper':>12} {'special lo':>12} {'special hi':>12}")
        for n in range(1, args.n_max + 1):
            r = wb.bounds_report(psi, None, n)
            lo, up = specialised(psi, n)
            print(f"  {n:3d} {r.lower:12.6g} {r.leading:16.6g} {r.upper:12.6g} {lo:12.6g} {up:12.6g}")


if __name__ == "__main__":
    main()
