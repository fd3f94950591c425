"""Exact cone geometry for 3-dimensional Gorenstein cones.

Lattice vectors are plain tuples of ints.  N-side vectors (rays ``a_j``) and
M-side vectors (dual rays ``s_j``, degrees ``R``) are not distinguished by
type; the pairing is the dot product.  Indices are 0-based throughout the
Python API and 1-based only in serialized reports.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import InputError, NotGorensteinError


def pairing(a, r):
    return sum(x * y for x, y in zip(a, r))


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(u, v, w):
    return pairing(cross(u, v), w)


def lattice_length(v):
    """Number of lattice segments on v: gcd of the coordinates (0 for v = 0)."""
    return reduce(gcd, (abs(int(x)) for x in v), 0)


def primitive(v):
    g = lattice_length(v)
    if g == 0:
        raise InputError("zero vector has no primitive direction")
    return tuple(int(x) // g for x in v)


def _check_integral(vectors, what):
    out = []
    for k, v in enumerate(vectors):
        if isinstance(v, (str, bytes)) or not hasattr(v, "__len__"):
            raise InputError(f"{what}[{k}]: expected a coordinate list, got {v!r}")
        coords = []
        for c in v:
            if isinstance(c, bool) or not isinstance(c, int):
                raise InputError(f"{what}[{k}]: non-integer coordinate {c!r}")
            coords.append(int(c))
        out.append(tuple(coords))
    return out


def cyclic_dual_rays(rays):
    """Dual rays of a 3D cone given by cyclically ordered rays.

    ``s_j`` is the primitive normal to the face spanned by rays j and j+1,
    oriented to be positive on all remaining rays.  Raises InputError when
    the rays are not the cyclically ordered extremal rays of a strongly
    convex full-dimensional cone.
    """
    rays = _check_integral(rays, "rays")
    n = len(rays)
    if n < 3:
        raise InputError(f"need at least 3 rays, got {n}")
    if any(len(a) != 3 for a in rays):
        raise InputError("rays must be 3-dimensional")
    if len(set(rays)) != n:
        raise InputError("rays must be distinct")
    for k, a in enumerate(rays):
        if lattice_length(a) != 1:
            raise InputError(f"rays[{k}] = {a} is not primitive")
    duals = []
    for j in range(n):
        a, b = rays[j], rays[(j + 1) % n]
        c = cross(a, b)
        if c == (0, 0, 0):
            raise InputError(f"rays {j} and {(j + 1) % n} are collinear")
        s = primitive(c)
        others = [pairing(rays[l], s) for l in range(n) if l not in (j, (j + 1) % n)]
        if all(v < 0 for v in others):
            s = tuple(-x for x in s)
        elif not all(v > 0 for v in others):
            raise InputError(
                f"rays {j}, {(j + 1) % n} do not span a facet: the rays are not "
                "in convex cyclic order"
            )
        duals.append(s)
    return duals


def solve_canonical_degree(rays):
    """The R* with <a_j, R*> = 1 for all rays, or NotGorensteinError."""
    rays = [tuple(a) for a in rays]
    basis = None
    for i in range(len(rays)):
        for j in range(i + 1, len(rays)):
            for k in range(j + 1, len(rays)):
                if det3(rays[i], rays[j], rays[k]) != 0:
                    basis = (rays[i], rays[j], rays[k])
                    break
            if basis:
                break
        if basis:
            break
    if basis is None:
        raise InputError("rays do not span a 3-dimensional cone")
    a, b, c = basis
    d = det3(a, b, c)
    # Cramer: R* = (b x c + c x a + a x b) / det solves <a,R>=<b,R>=<c,R>=1
    num = [x + y + z for x, y, z in zip(cross(b, c), cross(c, a), cross(a, b))]
    if any(x % d for x in num):
        raise NotGorensteinError("cone is not Gorenstein: no integral R* with <a_j, R*> = 1 for all rays")
    r = tuple(x // d for x in num)
    bad = [k for k, ray in enumerate(rays) if pairing(ray, r) != 1]
    if bad:
        raise NotGorensteinError(
            f"rays {bad} are not at height 1 for R* = {r}; the cone is not Gorenstein"
        )
    return r


@dataclass(frozen=True)
class GorensteinCone:
    rays: tuple
    dual_rays: tuple
    canonical_degree: tuple

    @property
    def N(self):
        return len(self.rays)

    def ray(self, j):
        return self.rays[j % self.N]

    def edge(self, j):
        """d_j = a_{j+1} - a_j."""
        a, b = self.ray(j), self.ray(j + 1)
        return tuple(y - x for x, y in zip(a, b))

    @property
    def edge_lengths(self):
        return tuple(lattice_length(self.edge(j)) for j in range(self.N))

    def weights(self, R):
        return tuple(pairing(a, R) for a in self.rays)

    def parallel(self, j, k):
        return j != k and cross(self.edge(j), self.edge(k)) == (0, 0, 0)

    def parallel_pairs(self):
        return [
            (j, k)
            for j in range(self.N)
            for k in range(self.N)
            if self.parallel(j, k)
        ]

    def degree(self, q, j=None, p=0):
        """q R* - p s_j (the symbolic degree form; positive p subtracts)."""
        base = tuple(q * x for x in self.canonical_degree)
        if j is None or p == 0:
            return base
        s = self.dual_rays[j]
        return tuple(x - p * y for x, y in zip(base, s))

    def to_json(self):
        return {
            "rays": [list(a) for a in self.rays],
            "dual_rays": [list(s) for s in self.dual_rays],
            "canonical_degree": list(self.canonical_degree),
            "edge_lengths": list(self.edge_lengths),
        }


def dual_cone(rays):
    """Build a GorensteinCone from cyclically ordered primitive rays."""
    duals = cyclic_dual_rays(rays)
    rays = tuple(tuple(int(x) for x in a) for a in rays)
    r_star = solve_canonical_degree(rays)
    return GorensteinCone(rays, tuple(duals), r_star)


def _hull(points):
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def cone_over_polygon(vertices):
    """Cone over a lattice polygon placed at height 1.

    Only the convex-hull vertices are kept, in counterclockwise order.
    """
    vertices = _check_integral(vertices, "polygon")
    if any(len(v) != 2 for v in vertices):
        raise InputError("polygon vertices must be 2-dimensional")
    hull = _hull(vertices)
    if len(hull) < 3:
        raise InputError("polygon is degenerate (fewer than 3 hull vertices)")
    return dual_cone([(x, y, 1) for x, y in hull])


@dataclass(frozen=True)
class QPolyhedron:
    """Cross-section of the cone with the affine plane <., R> = 1."""

    degree: tuple
    vertex_weights: tuple
    vertices: tuple  # index -> rational point, or None when weight < 1
    compact_edges: tuple  # 0-based (j, j+1 mod N)
    W: tuple
    compact: bool

    def to_json(self):
        return {
            "degree": list(self.degree),
            "vertex_weights": list(self.vertex_weights),
            "vertices": [
                None if v is None else [str(c) for c in v] for v in self.vertices
            ],
            "compact_edges": [[j + 1, k + 1] for j, k in self.compact_edges],
            "W": list(self.W),
            "compact": self.compact,
        }


def weight_class(w):
    """W_j(R) from the pairing w = <a_j, R>."""
    if w > 1:
        return 2
    if w == 1:
        return 1
    return 0


def q_polyhedron(cone, R):
    R = tuple(R)
    weights = cone.weights(R)
    verts = tuple(
        tuple(Fraction(x, w) for x in a) if w >= 1 else None
        for a, w in zip(cone.rays, weights)
    )
    n = cone.N
    edges = tuple(
        (j, (j + 1) % n)
        for j in range(n)
        if weights[j] >= 1 and weights[(j + 1) % n] >= 1
    )
    return QPolyhedron(
        degree=R,
        vertex_weights=weights,
        vertices=verts,
        compact_edges=edges,
        W=tuple(weight_class(w) for w in weights),
        compact=all(w > 0 for w in weights),
    )


def in_interior(R, cone):
    return all(w > 0 for w in cone.weights(R))


def in_dual_cone(R, cone):
    return all(w >= 0 for w in cone.weights(R))
