"""Run every acceptance criterion outside pytest and print one line each."""

import argparse
import sys

from thetachain.properties import SuiteConfig, compare_conventions, run_criterion


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-conventions", action="store_true", help="omit criterion 8")
    args = ap.parse_args()

    ok = True
    for crit in range(1, 8):
        results = run_criterion(crit, SuiteConfig())
        secs = sum(r.seconds for r in results)
        passed = all(r.ok for r in results)
        ok &= passed
        print(f"criterion {crit}: {'PASS' if passed else 'FAIL'} ({secs:.2f}s)")
        for r in results:
            if not r.ok:
                print("   ", r.line())
    if not args.skip_conventions:
        res = compare_conventions()
        ok &= res.ok
        print(f"criterion 8: {'PASS' if res.ok else 'FAIL'} ({res.seconds:.2f}s)")
    sys.exit(0 if ok else 2)


if __name__ == "__main__":
    main()
