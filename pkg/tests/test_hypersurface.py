from fractions import Fraction

import pytest

from toricdef.dgla import ArtinRing, TotalCochain, bounded_tuples, mc_check
from toricdef.errors import InputError
from toricdef.hochschild import multiplication, vanishes_on
from toricdef.hypersurface import HypersurfaceFamily, pi_g


def test_bad_parameters():
    for args in [(0, 0), (2, 2), (2, -1)]:
        with pytest.raises(InputError):
            HypersurfaceFamily(*args)
    with pytest.raises(InputError):
        HypersurfaceFamily(2, 0, order=0)
    F = HypersurfaceFamily(2, 1, order=2)
    with pytest.raises(InputError):
        F.product_cochain(2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_constant_terms(n):
    F = HypersurfaceFamily(n, 0)
    A = F.algebra
    T = bounded_tuples(A, 6, 2)
    assert vanishes_on(F.product_cochain(0) - multiplication(A), T)
    assert vanishes_on(F.bracket_cochain(0) - pi_g(n), T)


@pytest.mark.parametrize("n, m", [(1, 0), (2, 0), (2, 1), (3, 2)])
def test_degrees_and_first_order(n, m):
    F = HypersurfaceFamily(n, m)
    S2 = F.presentation.S2
    assert F.t_degree == tuple((n + 1 - m) * s for s in S2)
    q = F.product_cochain(1)
    assert q.degree == F.t_degree
    assert F.bracket_cochain(1).degree == tuple(a + b for a, b in zip(F.t_degree, S2))
    # x * y = z^(n+1) - t z^m
    S1, S3 = F.presentation.S1, F.presentation.S3
    zm = tuple(m * s for s in S2)
    assert F.product(S1, S3) == {0: {tuple(a + b for a, b in zip(S1, S3)): 1}, 1: {zm: -1}}


@pytest.mark.parametrize("n, m", [(1, 0), (2, 0), (2, 1)])
def test_family_is_mc(n, m):
    F = HypersurfaceFamily(n, m, order=3)
    A = F.algebra
    x = {
        (i,): TotalCochain(2, {1: F.product_cochain(i), 2: F.bracket_cochain(i)})
        for i in (1, 2)
    }
    ok, bad = mc_check(x, ArtinRing(1, 3), multiplication(A), pi_g(n), bounded_tuples(A, 4, 3))
    assert ok, bad


def test_reduce_normal_form():
    F = HypersurfaceFamily(1, 0, order=3)
    # (xy)^2 = (z^2 - t)^2 = z^4 - 2 t z^2 + t^2
    out = F.reduce({(2, 2, 0, 0): Fraction(1)})
    assert out == {(0, 0, 4, 0): 1, (0, 0, 2, 1): -2, (0, 0, 0, 2): 1}
