"""Tabulate regime, value and threshold for a family of forests across n.

    python3 scripts/regime_sweep.py --paths 4 --stars 3 4 5 6 --q 1 2 --n 20 60
"""

import argparse
import csv
import itertools
import sys

from psforest.forest import PathStarForest
from psforest.formulas import Regime, classify_regime, ex_main


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--paths", type=int, nargs="+", default=[4], help="path orders (one forest per choice)")
    ap.add_argument("--p", type=int, nargs="+", default=[1], help="number of paths")
    ap.add_argument("--stars", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--q", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--n", type=int, nargs=2, default=[20, 60], metavar=("LO", "HI"))
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["forest", "n", "regime", "value", "threshold", "guaranteed"])
    for l, p, a, q in itertools.product(args.paths, args.p, args.stars, args.q):
        f = PathStarForest((l,) * p, (a,) * q)
        regime = classify_regime(f)
        for n in range(max(args.n[0], f.order), args.n[1] + 1):
            if regime is Regime.UNCOVERED:
                w.writerow([f, n, regime.value, "", "", "false"])
                continue
            res = ex_main(f, n)
            w.writerow([f, n, res.regime.value, res.value, res.threshold, str(res.guaranteed).lower()])


if __name__ == "__main__":
    main()
