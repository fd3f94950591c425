"""Dimensions of T¹_(i)(-R) for three-dimensional Gorenstein cones.

Everything is driven by the pairings <a_j, R>, the edge lengths and the
per-edge spans sp K^R_{j,j+1}.  The spans are built directly: a point of
K^R_{j,j+1} is fixed modulo s_j by its two pairings (u, v), which range over
the box [0, w_j) x [0, w_{j+1}) intersected with the image lattice
{u = v mod l(j)}.  So the span is s_j plus the rational lifts of those box
points; no quotient lattice is ever built.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import ContractError, InputError
from .lattice import q_polyhedron
from .linalg import intersection_dim, orthogonal_complement, rank, solve

AMBIENT = 3


def binom(a, b):
    """C(a, b), zero when a < 0 or a < b."""
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def _edge(cone, j):
    if not isinstance(j, int) or isinstance(j, bool):
        raise InputError(f"edge index must be an integer, got {j!r}")
    if not 0 <= j < cone.N:
        raise InputError(f"edge index {j} outside 0..{cone.N - 1}")
    return j, (j + 1) % cone.N


@dataclass(frozen=True)
class EdgeSurfaceData:
    j: int
    endpoints: tuple
    length: int
    pairings: tuple

    @property
    def t1(self):
        u, v = self.pairings
        return int(2 <= u == v <= self.length)


def edge_data(cone, j, R):
    j, k = _edge(cone, j)
    w = cone.weights(R)
    return EdgeSurfaceData(
        j, (cone.ray(j), cone.ray(k)), cone.edge_lengths[j], (w[j], w[k])
    )


def edge_surface_t1(cone, j, R):
    """1 iff 2 <= <a_j,R> = <a_{j+1},R> <= l(j)."""
    return edge_data(cone, j, R).t1


def _box_points(u_max, v_max, length):
    return [
        (u, v)
        for u in range(max(u_max, 0))
        for v in range(max(v_max, 0))
        if (u - v) % length == 0
    ]


def _box_generators(u_max, v_max, length):
    """A subset of the box points with the same linear span.

    Diagonal points exist iff both bounds are >= 2; an off-diagonal point
    (u, v) has |u - v| >= l, so (l, 0) or (0, l) lies in the box as well.
    """
    out = []
    if min(u_max, v_max) >= 2:
        out.append((1, 1))
    if length < u_max:
        out.append((length, 0))
    if length < v_max:
        out.append((0, length))
    return out


def edge_span(cone, j, R, exhaustive=False):
    """A spanning set (rational rows) of sp K^R_{j,j+1}; both pairings must be >= 1.

    ``exhaustive`` lifts every box point instead of the reduced generator set.
    """
    j, k = _edge(cone, j)
    w = cone.weights(R)
    if w[j] < 1 or w[k] < 1:
        raise ContractError(f"edge {j} is not a compact edge of Q(R) for R = {R}")
    length = cone.edge_lengths[j]
    if exhaustive:
        points = _box_points(w[j], w[k], length)
    else:
        points = _box_generators(w[j], w[k], length)
    rows = [cone.ray(j), cone.ray(k)]
    vectors = [list(cone.dual_rays[j])]
    for u, v in points:
        if (u, v) == (0, 0):
            continue
        lift = solve(rows, [u, v], AMBIENT)
        if lift is None:
            raise ContractError(f"box point {(u, v)} has no lift")
        vectors.append(lift)
    return vectors


def edge_span_dim(cone, j, R, exhaustive=False):
    return rank(edge_span(cone, j, R, exhaustive), AMBIENT)


def zadazad_dim(cone, j, R):
    """max{0, W_j + W_{j+1} - 2 - t}: the span dimension in the edge quotient."""
    j, k = _edge(cone, j)
    W = q_polyhedron(cone, R).W
    return max(0, W[j] + W[k] - 2 - edge_surface_t1(cone, j, R))


@lru_cache(maxsize=4096)
def _intersection(cone, R):
    blocks = [
        orthogonal_complement(edge_span(cone, j, R), AMBIENT) for j in range(cone.N)
    ]
    # a span given by its complement C is {c : C c = 0}
    return intersection_dim(blocks, AMBIENT)


def span_intersection_dim(cone, R):
    """dim of the intersection of all per-edge spans; Q(R) must be compact.

    Returns an integer in 0..3 (0 happens at R = R*, where every span is the
    line through s_j).
    """
    R = tuple(R)
    if not q_polyhedron(cone, R).compact:
        raise ContractError(f"Q(R) is not compact for R = {R}")
    return _intersection(cone, R)


def s_i(cone, R, i):
    if not q_polyhedron(cone, R).compact:
        return 0
    return binom(span_intersection_dim(cone, R), i)


def vertex_term(w, i, n=AMBIENT):
    if w > 1:
        return binom(n, i)
    if w == 1:
        return binom(n - 1, i)
    return 0


@dataclass(frozen=True)
class T1Ingredients:
    degree: tuple
    i: int
    V: tuple
    Q: dict  # (j, k) -> value over compact edges
    s: int
    dim: int

    @property
    def raw(self):
        return sum(self.V) - sum(self.Q.values()) - binom(AMBIENT, self.i) + self.s


def t1_ingredients(cone, R, i):
    if i < 0:
        raise InputError(f"Hodge index must be nonnegative, got {i}")
    R = tuple(R)
    qp = q_polyhedron(cone, R)
    V = tuple(vertex_term(w, i) for w in qp.vertex_weights)
    Q = {}
    for j, k in qp.compact_edges:
        t = edge_surface_t1(cone, j, R)
        Q[(j, k)] = binom(qp.W[j] + qp.W[k] + AMBIENT - 4 - t, i)
    s = s_i(cone, R, i) if qp.compact else 0
    raw = sum(V) - sum(Q.values()) - binom(AMBIENT, i) + s
    return T1Ingredients(R, i, V, Q, s, max(0, raw))


def t1_dim(cone, R, i):
    return t1_ingredients(cone, R, i).dim


def t1_dims(cone, R, hodge=(1, 2, 3)):
    return tuple(t1_dim(cone, R, i) for i in hodge)


def vanishing_prefilter(cone, R):
    """True when consecutive pairings all differ, which certifies T¹_(i)(-R) = 0."""
    w = cone.weights(R)
    n = cone.N
    return all(w[j] != w[(j + 1) % n] for j in range(n))
