"""Semigroup algebras k[Λ] with Λ = σ∨ ∩ M, and the surfaces A_n.

Elements are finitely supported maps Λ -> Q.  Products never truncate: the
enumeration window only provides finite test bases.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil, floor

from .errors import InputError
from .lattice import cyclic_dual_rays, pairing


def add_vectors(u, v):
    return tuple(x + y for x, y in zip(u, v))


def sub_vectors(u, v):
    return tuple(x - y for x, y in zip(u, v))


def _dual_generators_2d(rays):
    (a, b) = rays
    out = []
    for u, other in ((a, b), (b, a)):
        s = (-u[1], u[0])
        if pairing(other, s) < 0:
            s = (-s[0], -s[1])
        out.append(s)
    return out


class SemigroupAlgebra:
    """k[σ∨ ∩ M] for a cone σ given by its rays (2D or 3D).

    ``weight`` must lie in the interior of σ; the default is the sum of the
    rays.  ``window_bound`` sets the default enumeration window.
    """

    def __init__(self, rays, weight=None, window_bound=6, presentation=None):
        self.rays = tuple(tuple(int(x) for x in a) for a in rays)
        self.dim = len(self.rays[0])
        if self.dim == 2:
            if len(self.rays) != 2:
                raise InputError("a 2D cone needs exactly 2 rays")
            self.dual_generators = _dual_generators_2d(self.rays)
        elif self.dim == 3:
            self.dual_generators = cyclic_dual_rays(self.rays)
        else:
            raise InputError("only 2D and 3D cones are supported")
        if weight is None:
            weight = tuple(sum(c) for c in zip(*self.rays))
        self.weight = tuple(weight)
        if any(pairing(self.weight, s) <= 0 for s in self.dual_generators):
            raise InputError(f"weight {self.weight} is not interior to the cone")
        if window_bound < 0:
            raise InputError("window bound must be nonnegative")
        self.window_bound = window_bound
        self.presentation = presentation
        self._windows = {}

    def __repr__(self):
        return f"SemigroupAlgebra(rays={self.rays}, weight={self.weight})"

    def contains(self, lam):
        return all(pairing(a, lam) >= 0 for a in self.rays)

    def degree_weight(self, lam):
        return pairing(self.weight, lam)

    @property
    def zero(self):
        return (0,) * self.dim

    def window(self, d=None):
        """Lattice points of σ∨ with weight <= d, sorted by (weight, lex)."""
        d = self.window_bound if d is None else d
        if d not in self._windows:
            self._windows[d] = enumerate_window(self, d)
        return self._windows[d]

    # basis-level protocol used by cochains
    def mul_basis(self, lam, mu):
        return {add_vectors(lam, mu): Fraction(1)}

    def mul(self, u, v):
        out = {}
        for lam, a in u.items():
            for mu, b in v.items():
                key = add_vectors(lam, mu)
                out[key] = out.get(key, 0) + a * b
        return {k: c for k, c in out.items() if c}

    def monomial(self, lam, coeff=1):
        return AlgebraElement(self, {tuple(lam): Fraction(coeff)})

    def element(self, terms):
        return AlgebraElement(self, terms)


def enumerate_window(algebra, d):
    corners = [algebra.zero]
    for s in algebra.dual_generators:
        ws = pairing(algebra.weight, s)
        corners.append(tuple(Fraction(d * x, ws) for x in s))
    lo = [floor(min(c[i] for c in corners)) for i in range(algebra.dim)]
    hi = [ceil(max(c[i] for c in corners)) for i in range(algebra.dim)]
    pts = [
        lam
        for lam in product(*(range(l, h + 1) for l, h in zip(lo, hi)))
        if algebra.contains(lam) and algebra.degree_weight(lam) <= d
    ]
    pts.sort(key=lambda lam: (algebra.degree_weight(lam), lam))
    return tuple(pts)


class AlgebraElement(Mapping):
    """Finitely supported Λ -> Q map; support is checked against the cone."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra, terms):
        clean = {}
        for lam, c in dict(terms).items():
            lam = tuple(lam)
            c = Fraction(c)
            if not c:
                continue
            if not algebra.contains(lam):
                raise InputError(f"exponent {lam} is not in the semigroup")
            clean[lam] = c
        self.algebra = algebra
        self._terms = clean

    def __getitem__(self, lam):
        return self._terms[tuple(lam)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v}
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(self.algebra, out)

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Mapping):
            return AlgebraElement(self.algebra, self.algebra.mul(self._terms, other))
        return AlgebraElement(
            self.algebra, {k: v * other for k, v in self._terms.items()}
        )

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.algebra.monomial(self.algebra.zero)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*x^{lam}" for lam, c in sorted(self._terms.items()))

    @property
    def terms(self):
        return dict(self._terms)


@dataclass(frozen=True)
class SurfacePresentation:
    n: int
    S1: tuple = field(init=False)
    S2: tuple = field(init=False)
    S3: tuple = field(init=False)
    equation: str = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "S1", (0, 1))
        object.__setattr__(self, "S2", (1, 1))
        object.__setattr__(self, "S3", (self.n + 1, self.n))
        object.__setattr__(self, "equation", f"xy - z^{self.n + 1}")

    @property
    def generators(self):
        return (self.S1, self.S2, self.S3)

    def relation_defect(self):
        """S1 + S3 - (n+1) S2; always (0, 0)."""
        return tuple(
            a + c - (self.n + 1) * b for a, b, c in zip(self.S1, self.S2, self.S3)
        )

    def normal_form(self, lam):
        """Exponents (a, b, c) with x^lam = x^a y^b z^c and a*b = 0.

        x, y, z are the monomials of S1, S3, S2.
        """
        u, v = lam
        n = self.n
        # lam = a S1 + c S2 = (c, a + c) when u <= v; else lam = b S3 + c S2
        if u <= v:
            a, c = v - u, u
            if a < 0 or c < 0:
                raise InputError(f"{lam} is not in Λ_{n}")
            return (a, 0, c)
        b = u - v
        c = v - n * b
        if c < 0:
            raise InputError(f"{lam} is not in Λ_{n}")
        return (0, b, c)

    def exponent(self, a, b, c):
        return tuple(
            a * s1 + b * s3 + c * s2 for s1, s2, s3 in zip(self.S1, self.S2, self.S3)
        )


def surface_algebra(n, weight=None, window_bound=6):
    """The A_n surface k[x,y,z]/(xy - z^{n+1}) as a semigroup algebra."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"surface index n must be a positive integer, got {n!r}")
    pres = SurfacePresentation(n)
    rays = ((1, 0), (-n, n + 1))
    return SemigroupAlgebra(rays, weight=weight, window_bound=window_bound, presentation=pres)


def jacobian_ring_dim(n):
    """dim k[x,y,z]/(dg/dx, dg/dy, dg/dz) for g = xy - z^{n+1}, with a monomial basis.

    The partials are y, x and -(n+1) z^n; each is a unit times a monomial, so
    the quotient is spanned by the standard monomials of (x, y, z^n).
    """
    if n < 0:
        raise InputError("n must be nonnegative")
    generators = [(1, 0, 0), (0, 1, 0), (0, 0, n)]

    def divisible(m):
        return any(all(e >= g for e, g in zip(m, gen)) for gen in generators)

    # every standard monomial has exponents below the pure-power generators
    bound = [1, 1, n]
    basis = [
        m
        for m in product(*(range(b + 1) for b in bound))
        if not divisible(m)
    ]
    return len(basis), basis
