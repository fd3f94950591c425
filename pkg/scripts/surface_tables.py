"""T¹ tables and Poisson cohomology of the A_n surfaces for a range of n."""

import argparse
import time

from toricdef.surface import MonomialBivector, e1_page, poisson_cohomology, surface_t1_dims


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=4)
    parser.add_argument("--window", type=int, default=20)
    parser.add_argument("--poisson-window", type=int, default=8)
    args = parser.parse_args(argv)
    for n in range(1, args.n_max + 1):
        start = time.perf_counter()
        dims = surface_t1_dims(n, args.window)
        nonzero = {R: v for R, v in sorted(dims.items()) if any(v)}
        H = poisson_cohomology(n, MonomialBivector(n), args.poisson_window)
        page = e1_page(n, columns=4)
        secs = time.perf_counter() - start
        print(f"n={n}: T1 nonzero at {list(nonzero)} of {len(dims)} degrees")
        print(f"      H1={H.h1} H2={H.h2} cokernels={H.cokernels} H0 degrees={len(H.h0)}")
        row = ", ".join(f"E1[{j},{k}]={v}" for (j, k), v in sorted(page.entries.items()))
        print(f"      {row}  ({secs:.1f}s)")


if __name__ == "__main__":
    main()
