"""Tabulate Shapovalov determinants against the product formula.

Usage: python3 scripts/shapovalov_table.py [--n 2] [--total 3] [--deg 1]
"""
import argparse
import time

from cherednik.pbw import DeformationGl, symbolic_zeta
from cherednik.suites import shapovalov_weights
from cherednik.verma import compare_shapovalov


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--total", type=int, default=3, help="maximal coordinate sum of nu")
    ap.add_argument("--deg", type=int, default=1, help="degree of zeta")
    args = ap.parse_args()
    d = DeformationGl(args.n, symbolic_zeta(args.deg))
    print(f"{'nu':>14} {'tau':>4} {'ratio':>8} {'seconds':>8}")
    for nu in shapovalov_weights(args.n, args.total):
        t0 = time.perf_counter()
        c = compare_shapovalov(nu, d)
        print(f"{str(list(nu)):>14} {c.tau:>4} {str(c.ratio):>8} {time.perf_counter() - t0:8.2f}")


if __name__ == "__main__":
    main()
