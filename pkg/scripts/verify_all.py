"""Run every named verification suite at its default bounds and summarise.

Usage: python3 scripts/verify_all.py [--skip shapovalov] [--json out.json]
Exit status is 0 only if every suite passes.
"""
import argparse
import json
import sys
import time

from cherednik.suites import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip", nargs="*", default=[], choices=sorted(SUITES))
    ap.add_argument("--json", default=None, help="write the full reports here")
    args = ap.parse_args()
    reports, ok = {}, True
    for name in SUITES:
        if name in args.skip:
            continue
        t0 = time.perf_counter()
        rep = run_suite(name)
        ok = ok and rep.ok
        reports[name] = rep.to_json()
        passed = sum(it.ok for it in rep.items)
        print(f"{'PASS' if rep.ok else 'FAIL'}  {name:<16} {passed}/{len(rep.items)}  {time.perf_counter() - t0:7.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=1, sort_keys=True)
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
