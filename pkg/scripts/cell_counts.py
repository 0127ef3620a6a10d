"""Count the cells of νK for catalog objects at several coefficient caps."""

import argparse

from thetachain.catalog import CATALOG
from thetachain.cells import enumerate_cells
from thetachain.simple import from_sequence


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--caps", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--convention", default="std")
    args = ap.parse_args()

    print("object".ljust(14) + "".join(f"cap {c}".rjust(8) for c in args.caps))
    for name, dims in CATALOG.items():
        K = from_sequence(dims, args.convention)
        counts = [len(enumerate_cells(K, c)) for c in args.caps]
        flag = "" if len(set(counts)) == 1 else "  <- not stable"
        print(name.ljust(14) + "".join(str(n).rjust(8) for n in counts) + flag)


if __name__ == "__main__":
    main()
