from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricdef.algebra import surface_algebra
from toricdef.checks import _random_pair, _tensor, poisson_examples
from toricdef.dgla import (
    ArtinRing,
    TotalCochain,
    bch,
    bounded_tuples,
    conjugation_check,
    gauge_act,
    mc_check,
    mc_extend,
    mc_residual,
    p_bracket,
    poisson_axiom_equivalence,
    series_equal,
    structure,
    tilde_d,
    validate_structure,
    zero_total,
)
from toricdef.errors import InputError, InvalidStructure
from toricdef.hochschild import (
    gerstenhaber_bracket,
    hochschild_d,
    hodge_project,
    linear_form_cochain,
    multiplication,
    random_bilinear_cochain,
    random_polynomial_cochain,
    vanishes_on,
    window_tuples,
)
from toricdef.hypersurface import HypersurfaceFamily, pi_g

A1 = surface_algebra(1)
MU = multiplication(A1)
PI = pi_g(1)
S2 = A1.presentation.S2


def tuples(arity, d=1):
    return list(window_tuples(A1.window(d), arity))


def random_total(rng, degree):
    if degree == 1:
        return TotalCochain(1, {1: random_polynomial_cochain(A1, 1, rng)})
    sym = random_polynomial_cochain(A1, 2, rng, symmetry="sym")
    skew = random_polynomial_cochain(A1, 2, rng, degree=S2, symmetry="skew")
    return TotalCochain(2, {1: sym, 2: skew})


def family_x(n=1, order=2, c=1):
    F = HypersurfaceFamily(n, 0, order=order)
    x = {}
    for i in range(1, order):
        x[(i,)] = TotalCochain(2, {1: F.product_cochain(i), 2: F.bracket_cochain(i)}).scale(
            Fraction(c) ** i
        )
    return F, x


def test_total_cochain_validation():
    with pytest.raises(InputError):
        TotalCochain(0, {})
    with pytest.raises(InputError):
        TotalCochain(2, {3: MU})
    with pytest.raises(InputError):
        TotalCochain(3, {1: MU})
    assert zero_total(2).vanishes_on(tuples(2))
    F = TotalCochain.from_cochain(random_polynomial_cochain(A1, 3, np.random.default_rng(0)))
    assert F.eigen_check(tuples(3))
    assert F.scale(0).vanishes_on(tuples(3))


def test_bracket_remark_examples():
    M = TotalCochain(2, {1: MU})
    assert p_bracket(M, M).vanishes_on(tuples(3))
    P = TotalCochain(2, {2: PI})
    got = p_bracket(P, P)
    assert set(got.components) == {3}
    expect = hodge_project(gerstenhaber_bracket(PI, PI), 3)
    assert vanishes_on(got.component(3) - expect, tuples(3))


@given(st.integers(0, 10_000), st.sampled_from([(1, 1), (1, 2), (2, 2)]))
@settings(max_examples=15)
def test_p_bracket_graded_antisymmetry(seed, degs):
    rng = np.random.default_rng(seed)
    m, n = degs
    F, G = random_total(rng, m), random_total(rng, n)
    sign = -((-1) ** ((m + 1) * (n + 1)))
    assert (p_bracket(F, G) - p_bracket(G, F).scale(sign)).vanishes_on(tuples(m + n - 1))


@given(st.integers(0, 10_000), st.sampled_from([1, 2]))
@settings(max_examples=10)
def test_tilde_d_squared(seed, degree):
    F = random_total(np.random.default_rng(seed), degree)
    dd = tilde_d(tilde_d(F, MU, PI), MU, PI)
    assert dd.vanishes_on(tuples(degree + 2))


def test_tilde_d_on_derivation():
    theta = linear_form_cochain(A1, (2, -1))
    out = tilde_d(TotalCochain(1, {1: theta}), MU, PI)
    assert vanishes_on(out.component(1), tuples(2, 2))
    assert vanishes_on(out.component(2) - gerstenhaber_bracket(PI, theta), tuples(2, 2))


def test_tilde_d_without_bracket_is_hochschild():
    rng = np.random.default_rng(4)
    for m in (1, 2):
        f = random_polynomial_cochain(A1, m, rng)
        F = TotalCochain.from_cochain(f) if m > 1 else TotalCochain(1, {1: f})
        out = tilde_d(F, MU, None)
        total = out.component(1)
        for j in range(2, m + 2):
            if out.component(j) is not None:
                total = total + out.component(j)
        assert vanishes_on(total - hochschild_d(f, A1), tuples(m + 1))


def test_validate_structure():
    validate_structure(MU, PI, tuples(3))
    bad = random_polynomial_cochain(A1, 2, np.random.default_rng(1), max_degree=3, symmetry="skew")
    with pytest.raises(InvalidStructure):
        validate_structure(MU, bad, tuples(3, 2))


def test_artin_ring_parse():
    assert ArtinRing.parse("t^3") == ArtinRing(1, 3)
    B = ArtinRing.parse("t^4")
    assert B.mul((1,), (2,)) == (3,) and B.mul((2,), (2,)) is None
    for bad in ("t", "t^0", "t^1", "t^a"):
        with pytest.raises(InputError):
            ArtinRing.parse(bad)


def test_mc_examples():
    B = ArtinRing(1, 3)
    assert mc_check({}, B, MU, PI, tuples(3))[0]
    _, x = family_x(order=2)
    assert mc_check(x, ArtinRing(1, 2), MU, PI, tuples(3))[0]
    with pytest.raises(InputError):
        mc_residual({(0,): x[(1,)]}, B, MU, PI)
    with pytest.raises(InputError):
        mc_residual({(3,): x[(1,)]}, B, MU, PI)


def test_mc_detects_non_solutions():
    B = ArtinRing(1, 3)
    rng = np.random.default_rng(2)
    x = {(1,): random_total(rng, 2)}
    ok, bad = mc_check(x, B, MU, PI, tuples(3, 2))
    assert not ok and (1,) in bad


def test_gauge_examples():
    B = ArtinRing(1, 3)
    _, x = family_x(order=3, c=2)
    T = tuples(3)
    assert series_equal(gauge_act({}, x, B, MU, PI), x, tuples(2))
    # a degree-0 derivation orthogonal to S2 is d̃-closed and fixes the origin
    theta = TotalCochain(1, {1: linear_form_cochain(A1, (1, -1))})
    assert tilde_d(theta, MU, PI).vanishes_on(tuples(2, 2))
    assert series_equal(gauge_act({(1,): theta}, {}, B, MU, PI), {}, tuples(2, 2))
    rng = np.random.default_rng(6)
    alpha = {(1,): random_total(rng, 1), (2,): random_total(rng, 1)}
    y = gauge_act(alpha, x, B, MU, PI)
    assert mc_check(y, B, MU, PI, T)[0]
    assert conjugation_check(alpha, x, y, B, MU, PI, tuples(2)) is None
    with pytest.raises(InputError):
        gauge_act({(1,): x[(1,)]}, x, B, MU, PI)


def test_gauge_group_action():
    B = ArtinRing(1, 3)
    _, x = family_x(order=3, c=1)
    rng = np.random.default_rng(8)
    a = {(1,): random_total(rng, 1), (2,): random_total(rng, 1)}
    b = {(1,): random_total(rng, 1)}
    z1 = gauge_act(b, gauge_act(a, x, B, MU, PI), B, MU, PI)
    z2 = gauge_act(bch(b, a, B), x, B, MU, PI)
    assert series_equal(z1, z2, tuples(2))
    with pytest.raises(InputError):
        bch(a, b, ArtinRing(1, 6))


def test_extend_zero():
    res = mc_extend({}, ArtinRing(1, 3), MU, PI, A1, 2, S2, d=4)
    assert res.solved and res.extended == {}


def test_family_direction_unobstructed():
    F, x = family_x(order=2)
    B = ArtinRing(1, 3)
    res = mc_extend(x, B, MU, PI, A1, 2, F.coefficient_degree(2), d=5)
    assert res.solved
    assert mc_check(res.extended, B, MU, PI, bounded_tuples(A1, 5, 3))[0]


@pytest.mark.slow
def test_extension_with_nonzero_obstruction_term():
    rng = np.random.default_rng(11)
    alpha = TotalCochain(1, {1: random_polynomial_cochain(A1, 1, rng, degree=(0, 0))})
    x1 = tilde_d(alpha, MU, PI).scale(-1)
    B = ArtinRing(1, 3)
    d = 6
    half = p_bracket(x1, x1).scale(Fraction(1, 2))
    assert not half.vanishes_on(bounded_tuples(A1, d, 3))
    res = mc_extend({(1,): x1}, B, MU, PI, A1, 2, (0, 0), d=d)
    assert res.solved and res.unknowns > 0 and res.equations > 0
    assert mc_check(res.extended, B, MU, PI, bounded_tuples(A1, d, 3))[0]


def test_obstruction_is_closed():
    # ½[c, c]_p of a first-order cocycle is d̃-closed
    rng = np.random.default_rng(3)
    alpha = TotalCochain(1, {1: random_polynomial_cochain(A1, 1, rng)})
    c = tilde_d(alpha, MU, PI)
    obs = p_bracket(c, c).scale(Fraction(1, 2))
    assert tilde_d(obs, MU, PI).vanishes_on(tuples(4))


def test_extension_rejects_bad_order():
    with pytest.raises(InputError):
        mc_extend({}, ArtinRing(1, 3), MU, PI, A1, 3, S2)
    with pytest.raises(InputError):
        mc_extend({}, ArtinRing(2, 3), MU, PI, A1, 1, S2)


def test_axiom_report_examples():
    rng = np.random.default_rng(0)
    for d, mu, pb in poisson_examples(rng):
        rep = poisson_axiom_equivalence(_tensor(mu), _tensor(pb), d)
        assert all(rep["axioms"].values()) and all(rep["residuals_vanish"].values())
        assert rep["consistent"] and all(rep["identities"].values())
        zero = [[[0] * d for _ in range(d)] for _ in range(d)]
        if any(any(any(r) for r in plane) for plane in mu):
            rep = poisson_axiom_equivalence(_tensor(mu), _tensor(zero), d)
            assert all(rep["residuals_vanish"].values())


def test_leibniz_violation():
    d, mu, _ = next(poisson_examples(np.random.default_rng(0)))
    pb = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    # {x, 1} = x breaks Leibniz
    pb[1][0][1], pb[0][1][1] = Fraction(1), Fraction(-1)
    rep = poisson_axiom_equivalence(_tensor(mu), _tensor(pb), d)
    assert rep["axioms"]["leibniz"] is False
    assert rep["residuals_vanish"]["mu_mu_p"] is False
    assert rep["consistent"] and all(rep["identities"].values())


@given(st.integers(0, 10_000), st.integers(1, 3))
@settings(max_examples=20)
def test_axiom_report_random(seed, d):
    mu, pb = _random_pair(d, np.random.default_rng(seed))
    rep = poisson_axiom_equivalence(_tensor(mu), _tensor(pb), d)
    assert rep["consistent"] and all(rep["identities"].values())


def test_axiom_report_rejects_wrong_symmetry():
    mu, pb = _random_pair(2, np.random.default_rng(5))
    mu[0][1][0] += 1
    with pytest.raises(InputError):
        poisson_axiom_equivalence(_tensor(mu), _tensor(pb), 2)


def test_structure_helper():
    S = structure(MU, None)
    assert set(S.components) == {1}
    assert set(structure(MU, PI).components) == {1, 2}
