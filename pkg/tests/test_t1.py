from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricdef.errors import ContractError, InputError
from toricdef.lattice import q_polyhedron
from toricdef.t1 import (
    binom,
    edge_span_dim,
    edge_surface_t1,
    s_i,
    span_intersection_dim,
    t1_dim,
    t1_dims,
    t1_ingredients,
    vanishing_prefilter,
    zadazad_dim,
)


def test_binomial_convention():
    assert binom(2, 3) == 0
    assert binom(-1, 0) == 0
    assert binom(3, 0) == 1 and binom(4, 2) == 6


def test_edge_surface_t1(p123, hexagon):
    R = p123.degree(2)
    assert edge_surface_t1(p123, 0, R) == 1
    assert edge_surface_t1(p123, 1, R) == 0
    for cone in (p123, hexagon):
        for j in range(cone.N):
            assert edge_surface_t1(cone, j, cone.canonical_degree) == 0


@pytest.mark.parametrize("length", range(1, 7))
def test_edge_surface_matches_surface_table(length):
    # a triangle with one edge of lattice length n+1
    from toricdef.lattice import cone_over_polygon

    cone = cone_over_polygon([(0, 0), (length, 0), (0, 1)])
    j = cone.edge_lengths.index(length) if length > 1 else 0
    for k in range(0, length + 3):
        R = cone.degree(k)
        expect = 1 if 2 <= k <= cone.edge_lengths[j] else 0
        assert edge_surface_t1(cone, j, R) == expect


def test_span_intersection_examples(p123, hexagon):
    assert span_intersection_dim(hexagon, hexagon.degree(2)) == 3
    assert span_intersection_dim(p123, p123.degree(2)) == 1
    assert span_intersection_dim(p123, p123.degree(3)) == 2
    with pytest.raises(ContractError):
        span_intersection_dim(p123, p123.degree(2, 0, 1))


def test_s_i_examples(p123, hexagon):
    assert s_i(p123, p123.degree(2, 0, 1), 1) == 0
    assert s_i(hexagon, hexagon.degree(2), 2) == 3
    for R in (p123.degree(2), p123.degree(3), p123.canonical_degree):
        assert s_i(p123, R, 0) == 1


def test_t1_dim_examples(p123, hexagon):
    assert t1_dim(p123, p123.canonical_degree, 1) == 0
    assert t1_dims(p123, p123.degree(2, 0, 1), (1, 2, 3, 4)) == (1, 2, 1, 0)
    assert t1_dim(hexagon, hexagon.canonical_degree, 2) == 3
    with pytest.raises(InputError):
        t1_dim(p123, p123.canonical_degree, -1)


def test_prefilter_examples(p123):
    s2 = p123.dual_rays[1]
    assert p123.weights(s2) == (6, 0, 0)
    assert not vanishing_prefilter(p123, s2)
    assert not vanishing_prefilter(p123, p123.degree(3))
    # a degree with three distinct pairings
    found = None
    for R in product(range(-3, 4), repeat=3):
        w = p123.weights(R)
        if len(set(w)) == 3 and min(w) > 0:
            found = R
            break
    assert found is not None and vanishing_prefilter(p123, found)
    assert t1_dims(p123, found) == (0, 0, 0)


@pytest.mark.parametrize("name", ["p123", "hexagon", "square", "rectangle", "trapezoid"])
def test_evaluator_invariants(name, request):
    cone = request.getfixturevalue(name)
    for q in range(-1, 4):
        for j in range(cone.N):
            for p in range(-4, 5):
                R = cone.degree(q, j, p)
                qp = q_polyhedron(cone, R)
                dims = t1_dims(cone, R, (0, 1, 2, 3, 4, 5))
                assert all(d >= 0 for d in dims)
                if vanishing_prefilter(cone, R):
                    assert dims == (0,) * 6
                if min(cone.weights(R)) <= 0:
                    assert all(s_i(cone, R, i) == 0 for i in (1, 2, 3))
                for i in range(4):
                    assert s_i(cone, R, i) <= binom(3, i)
                if qp.compact:
                    for a, b in qp.compact_edges:
                        expect = max(0, qp.W[a] + qp.W[b] - 2 - edge_surface_t1(cone, a, R))
                        assert zadazad_dim(cone, a, R) == expect


def test_exhaustive_span_agrees(p123, square):
    for cone in (p123, square):
        for q in range(1, 4):
            R = cone.degree(q)
            for j in range(cone.N):
                assert edge_span_dim(cone, j, R) == edge_span_dim(cone, j, R, exhaustive=True)


def test_ingredients_raw(p123):
    ing = t1_ingredients(p123, p123.degree(2), 2)
    assert ing.dim == max(0, ing.raw)
    assert ing.dim == 1


@given(st.integers(-2, 5), st.integers(0, 2), st.integers(-6, 6), st.integers(4, 6))
def test_higher_hodge_vanishes(q, j, p, i):
    from toricdef.lattice import dual_cone

    cone = dual_cone([(-1, -1, 1), (2, -1, 1), (-1, 1, 1)])
    assert t1_dim(cone, cone.degree(q, j, p), i) == 0
