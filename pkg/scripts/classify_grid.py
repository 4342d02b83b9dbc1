"""Classify L(lambda) over a grid of dominant gl_2 weights for a numeric zeta.

Usage: python3 scripts/classify_grid.py --zeta 55,-13,1 [--max 8]
Prints one row per lambda_1 with the box corner nu (or '.' when infinite).
"""
import argparse
from fractions import Fraction

from cherednik.findim import classify
from cherednik.pbw import DeformationGl, parse_zeta


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--zeta", default="55,-13,1")
    ap.add_argument("--max", type=int, default=8)
    args = ap.parse_args()
    d = DeformationGl(2, parse_zeta(args.zeta.split(",")))
    lam2s = range(-2, args.max + 1)
    print("lam1\\lam2 " + " ".join(f"{b:>7}" for b in lam2s))
    for a in range(-2, args.max + 1):
        cells = []
        for b in lam2s:
            if b > a:
                cells.append(" " * 7)
                continue
            r = classify((Fraction(a), Fraction(b)), d)
            cells.append(f"{','.join(map(str, r.nu)) if r.finite else '.':>7}")
        print(f"{a:>9} " + " ".join(cells))


if __name__ == "__main__":
    main()
