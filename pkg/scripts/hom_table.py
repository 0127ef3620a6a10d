"""Print |Hom(K, L)| for every pair of catalog objects, with a timing line.

    python scripts/hom_table.py [--convention swapped] [--check]

``--check`` also compares each entry with the brute-force matrix search.
"""

import argparse
import time

from thetachain.adc import brute_force_hom
from thetachain.catalog import CATALOG
from thetachain.simple import CONVENTIONS, enumerate_hom, from_sequence


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--convention", choices=CONVENTIONS, default="std")
    ap.add_argument("--check", action="store_true", help="compare with the brute-force oracle")
    args = ap.parse_args()

    names = list(CATALOG)
    objs = [from_sequence(CATALOG[n], args.convention) for n in names]
    width = max(map(len, names)) + 2
    print("".ljust(width) + "".join(n[:10].rjust(12) for n in names))
    start = time.perf_counter()
    for name, K in zip(names, objs):
        row = []
        for L in objs:
            homs = enumerate_hom(K, L)
            if args.check and homs != brute_force_hom(K, L):
                raise SystemExit(f"oracle disagrees on {name}")
            row.append(len(homs))
        print(name.ljust(width) + "".join(str(n).rjust(12) for n in row))
    print(f"# {args.convention}: {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
