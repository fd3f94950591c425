"""Order-two extension of first-order Poisson deformations of A_1.

A gauge-trivial first-order term x_1 = -d̃α has a nonzero bracket
½[x_1, x_1]_p, so the solver has real work to do; the hypersurface family
direction is unobstructed.  Both results are rechecked with mc_check.
"""

import argparse
import time

import numpy as np

from toricdef.dgla import ArtinRing, TotalCochain, bounded_tuples, mc_check, mc_extend, tilde_d
from toricdef.hochschild import multiplication, random_polynomial_cochain
from toricdef.hypersurface import HypersurfaceFamily, pi_g


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=11)
    parser.add_argument("--window", type=int, default=6)
    args = parser.parse_args(argv)
    F = HypersurfaceFamily(1, 0, order=2)
    A = F.algebra
    mu, pi = multiplication(A), pi_g(1)
    B = ArtinRing(1, 3)
    check = bounded_tuples(A, args.window, 3)

    x = {(1,): TotalCochain(2, {1: F.product_cochain(1), 2: F.bracket_cochain(1)})}
    res = mc_extend(x, B, mu, pi, A, 2, F.coefficient_degree(2), d=args.window)
    ok = res.solved and mc_check(res.extended, B, mu, pi, check)[0]
    print(f"family direction: solved={res.solved} unknowns={res.unknowns} mc={ok}")

    rng = np.random.default_rng(args.seed)
    alpha = TotalCochain(1, {1: random_polynomial_cochain(A, 1, rng, degree=(0, 0))})
    x = {(1,): tilde_d(alpha, mu, pi).scale(-1)}
    start = time.perf_counter()
    res = mc_extend(x, B, mu, pi, A, 2, (0, 0), d=args.window)
    ok = res.solved and mc_check(res.extended, B, mu, pi, check)[0]
    secs = time.perf_counter() - start
    print(
        f"gauge-trivial direction: solved={res.solved} unknowns={res.unknowns} "
        f"equations={res.equations} mc={ok} ({secs:.1f}s)"
    )


if __name__ == "__main__":
    main()
