"""Compare the closed-form classification with the T¹ evaluator on cone files.

    python3 scripts/crosscheck_scan.py tests/fixtures/*.json --q-max 5 --p-max 20
"""

import argparse
import sys
import time

from toricdef.classify import crosscheck, higher_vanishing, scan_degrees
from toricdef.reports import load_cone


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("cones", nargs="+")
    parser.add_argument("--q-max", type=int, default=5)
    parser.add_argument("--p-max", type=int, default=20)
    args = parser.parse_args(argv)
    status = 0
    for path in args.cones:
        cone = load_cone(path)
        start = time.perf_counter()
        bad = crosscheck(cone, args.q_max, args.p_max)
        higher = higher_vanishing(cone, args.q_max, args.p_max)
        n = len(scan_degrees(cone, args.q_max, args.p_max))
        secs = time.perf_counter() - start
        print(f"{path}: {n} degrees, {len(bad)} mismatches, {len(higher)} with i>=4, {secs:.1f}s")
        for m in bad:
            w = cone.weights(m.degree)
            print(f"  R={m.degree} pairings={w} classified={m.classified} evaluated={m.evaluated}")
        if bad or higher:
            status = 2
    return status


if __name__ == "__main__":
    sys.exit(main())
