"""Compare wreath hom-sets with Θ hom-sets through V for all small wreath objects.

Each pair of wreath objects whose V-images have at most ``--size`` basis
elements is checked; the script prints a histogram of hom-set sizes and
every pair where V fails to be a bijection (none are expected).
"""

import argparse
import itertools
import time
from collections import Counter

from thetachain.properties import wreath_objects
from thetachain.wreath import fully_faithful_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=10, help="largest V-image to consider")
    ap.add_argument("--convention", default="std")
    args = ap.parse_args()

    objs = wreath_objects(args.size, args.convention)
    sizes: Counter = Counter()
    bad = []
    start = time.perf_counter()
    for w1, w2 in itertools.product(objs, repeat=2):
        rep = fully_faithful_report(w1, w2)
        sizes[rep.wreath_count] += 1
        if not rep.ok:
            bad.append((w1, w2, rep))
    print(f"{len(objs)} objects, {len(objs) ** 2} pairs, {time.perf_counter() - start:.2f}s")
    for n, k in sorted(sizes.items()):
        print(f"  |Hom| = {n:4d}: {k} pairs")
    for w1, w2, rep in bad:
        print(f"MISMATCH m={w1.m} -> m={w2.m}: {rep.wreath_count} vs {rep.target_count}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
