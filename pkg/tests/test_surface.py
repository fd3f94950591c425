import json
from fractions import Fraction
from itertools import product

import pytest

from toricdef.algebra import jacobian_ring_dim, surface_algebra
from toricdef.errors import InputError, UnsupportedRepresentation
from toricdef.hochschild import (
    find_nonzero,
    gerstenhaber_bracket,
    linear_form_cochain,
    multiplication,
    vanishes_on,
    window_tuples,
)
from toricdef.surface import (
    DerivationCochain,
    MonomialBivector,
    SpectralPage,
    build_d1_matrix,
    d1_closed_form,
    degree_window,
    derivation_space,
    e1_page,
    expected_t1_degrees,
    poisson_cohomology,
    spot_check_zero_map,
    surface_t1,
    surface_t1_dims,
    verify_pi_g,
)


def nonzero(n, window=12):
    return sorted(R for R, v in surface_t1_dims(n, window).items() if any(v))


def test_t1_table_examples():
    assert nonzero(1) == [(2, 2)]
    assert nonzero(3) == [(2, 2), (3, 3), (4, 4)]
    for n in range(1, 5):
        assert surface_t1(n, (1, 1)) == (0, 0)
        for R in expected_t1_degrees(n):
            assert surface_t1(n, R) == (1, 1)
    with pytest.raises(InputError):
        surface_t1(0, (2, 2))


def test_degree_window_contains_expected():
    for n in range(1, 4):
        W = set(degree_window(n, 2 * (n + 1)))
        assert set(expected_t1_degrees(n)) <= W


def test_e1_page():
    page = e1_page(2)
    for j in range(3, 6):
        assert page.entry(j, j - 1) == 2 and page.entry(j, j) == 2
    assert page.entry(1, 3) == 0
    assert page.entry(1, 1) == "module" and page.entry(2, 1) == "module"
    assert page.entry(2, 3) == "unknown"
    assert SpectralPage.from_json(json.loads(json.dumps(page.to_json()))) == page
    for n in range(1, 5):
        p = e1_page(n)
        assert p.entry(1, 2) == n == jacobian_ring_dim(n)[0] == p.entry(2, 2)
    with pytest.raises(InputError):
        e1_page(2, columns=1)
    with pytest.raises(InputError):
        e1_page(0)


def test_monomial_bivector(tmp_path):
    with pytest.raises(UnsupportedRepresentation):
        MonomialBivector(2, 1, 2)
    assert MonomialBivector(2, 0, 2).is_zero
    b = MonomialBivector(3, Fraction(5, 2), 1)
    assert MonomialBivector.from_json(b.to_json()) == b
    path = tmp_path / "biv.json"
    path.write_text(json.dumps(b.to_json()))
    assert MonomialBivector.named(3, str(path)) == b
    with pytest.raises(InputError):
        MonomialBivector.named(2, str(path))
    with pytest.raises(InputError):
        MonomialBivector.named(2, "nonsense")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(InputError, match="bad.json:1:2"):
        MonomialBivector.named(2, str(bad))


@pytest.mark.parametrize("n", range(1, 5))
def test_pi_g(n):
    A = surface_algebra(n)
    p = A.presentation
    pi = MonomialBivector(n).cochain()
    assert verify_pi_g(n)
    target = tuple(a + b - c for a, b, c in zip(p.S1, p.S3, p.S2))
    assert pi.on_basis((p.S1, p.S3)) == {target: -(n + 1)}
    assert MonomialBivector(n).degree == p.S2


def test_derivation_oracle():
    A = surface_algebra(2)
    for c in [(1, 0), (2, -3)]:
        for D in [(0, 0), (1, 1), (-1, 0)]:
            f = linear_form_cochain(A, c, D)
            g = DerivationCochain(A, c, D)
            assert vanishes_on(f - g, [(lam,) for lam in A.window(6)])


@pytest.mark.parametrize("n", [1, 2])
def test_d1_matrix(n):
    A = surface_algebra(n)
    pig = MonomialBivector(n)
    zero = MonomialBivector(n, 0)
    mu = multiplication(A)
    gens = A.presentation.generators
    for D in degree_window(n, 4):
        M = build_d1_matrix(n, pig, D)
        assert M.target_degree == tuple(a + b for a, b in zip(D, A.presentation.S2))
        Z = build_d1_matrix(n, zero, D)
        assert all(v == 0 for row in Z.matrix for v in row)
        if not M.matrix:
            continue
        for c, col in zip(derivation_space(n, D), zip(*M.matrix)):
            assert col[0] == d1_closed_form(n, pig, c, D)
            image = gerstenhaber_bracket(pig.cochain(), linear_form_cochain(A, c, D)) * -1
            pairs = list(window_tuples(A.window(3), 2))
            for a, b in pairs:
                assert image.on_basis((a, b)) == {k: -v for k, v in image.on_basis((b, a)).items()}
            # a biderivation: [μ, image] = 0 on generator triples
            assert find_nonzero(gerstenhaber_bracket(mu, image), list(product(gens, repeat=3))) is None


def test_d1_anchor_rank():
    M = build_d1_matrix(1, MonomialBivector(1), (0, 0))
    assert len(M.source_basis) == 2 and M.rank == 1 and M.kernel == 1 and M.cokernel == 0


def test_d1_rejects_other_structures():
    with pytest.raises(UnsupportedRepresentation):
        build_d1_matrix(1, multiplication(surface_algebra(1)), (0, 0))


@pytest.mark.parametrize("n", [1, 2])
def test_poisson_cohomology_pi_g(n):
    H = poisson_cohomology(n, window=6)
    assert H.h1 == n and H.h2 == n and H.cokernels == {}
    assert not H.module
    assert H.zero_map_degrees == expected_t1_degrees(n)[::-1]
    data = H.to_json()
    assert data["H1"] == n and data["schema"] == 1


def test_poisson_cohomology_zero():
    H = poisson_cohomology(1, MonomialBivector(1, 0), window=4)
    assert H.module and H.zero_map_degrees == []
    assert H.h1 == sum(H.cokernels.values()) + 1
    assert H.h2 == 1


def test_poisson_cohomology_unsupported():
    with pytest.raises(UnsupportedRepresentation):
        poisson_cohomology(2, MonomialBivector(2, 1, 0), window=4)
    with pytest.raises(UnsupportedRepresentation):
        poisson_cohomology(1, multiplication(surface_algebra(1)), window=4)


def test_spot_check():
    assert spot_check_zero_map(3, MonomialBivector(3), 8) == [(4, 4), (3, 3), (2, 2)]
    assert spot_check_zero_map(2, MonomialBivector(2, 0)) == []
