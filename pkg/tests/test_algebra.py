import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricdef.algebra import SemigroupAlgebra, jacobian_ring_dim, surface_algebra
from toricdef.errors import InputError


def test_surface_generators():
    A = surface_algebra(1)
    p = A.presentation
    assert p.S3 == (2, 1)
    assert p.relation_defect() == (0, 0)
    assert surface_algebra(3).presentation.S3 == (4, 3)
    for n in range(1, 8):
        pres = surface_algebra(n).presentation
        assert pres.relation_defect() == (0, 0)
        assert all(surface_algebra(n).contains(s) for s in pres.generators)


def test_surface_rejects_bad_n():
    for bad in (0, -1, 1.5, True):
        with pytest.raises(InputError):
            surface_algebra(bad)


def test_window_zero_and_bruteforce():
    A = surface_algebra(1)
    assert A.window(0) == ((0, 0),)
    for d in range(0, 9):
        brute = sorted(
            (x, y)
            for x in range(-20, 21)
            for y in range(-20, 21)
            if A.contains((x, y)) and A.degree_weight((x, y)) <= d
        )
        assert sorted(A.window(d)) == brute


def test_window_on_3d_cone(p123):
    A = SemigroupAlgebra(p123.rays)
    for lam in A.window(4):
        assert all(sum(a * b for a, b in zip(r, lam)) >= 0 for r in p123.rays)


def test_window_divisibility_closed():
    A = surface_algebra(2)
    W = set(A.window(7))
    for lam in W:
        for mu in W:
            s = (lam[0] + mu[0], lam[1] + mu[1])
            if s in W:
                assert lam in W and mu in W


def test_bad_weight():
    with pytest.raises(InputError):
        SemigroupAlgebra(((1, 0), (-1, 2)), weight=(-1, 0))


def test_relation_as_elements():
    for n in range(1, 5):
        A = surface_algebra(n)
        p = A.presentation
        x, y, z = A.monomial(p.S1), A.monomial(p.S3), A.monomial(p.S2)
        assert x * y == z ** (n + 1)


@given(st.integers(1, 4), st.data())
def test_product_commutative_associative(n, data):
    A = surface_algebra(n)
    W = A.window(6)
    pick = st.sampled_from(W)
    coeffs = st.integers(-3, 3)
    elts = [
        A.element({data.draw(pick): data.draw(coeffs), data.draw(pick): data.draw(coeffs)})
        for _ in range(3)
    ]
    a, b, c = elts
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


def test_jacobian_ring():
    for n in range(1, 11):
        dim, basis = jacobian_ring_dim(n)
        assert dim == n
        assert basis == [(0, 0, k) for k in range(n)]
    assert jacobian_ring_dim(0)[0] == 0
