"""Explicit deformations of the A_n surfaces as hypersurfaces.

g_t = xy - z^(n+1) + t z^m over k[t]/t^order.  The quotient k[x,y,z,t]/(g_t)
is free over k[t] on the normal-form monomials x^a z^c, y^b z^c, which are
the lattice points of Λ_n.  Transporting the product and the Jacobian bracket
{f, h} = det(∇f, ∇h, ∇g_t) to that basis gives, order by order in t, an exact
Maurer–Cartan element for the surface algebra.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import surface_algebra
from .errors import InputError
from .hochschild import Cochain


def _padd(acc, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _pmul(p, q, order):
    out = {}
    for (a1, b1, c1, t1), u in p.items():
        for (a2, b2, c2, t2), v in q.items():
            if t1 + t2 < order:
                _padd(out, (a1 + a2, b1 + b2, c1 + c2, t1 + t2), u * v)
    return out


def _pderiv(p, var):
    out = {}
    for key, c in p.items():
        e = key[var]
        if e:
            new = list(key)
            new[var] -= 1
            _padd(out, tuple(new), c * e)
    return out


class HypersurfaceFamily:
    """The family g_t = xy - z^(n+1) + t z^m truncated at t^order."""

    def __init__(self, n, m, order=3):
        if n < 1:
            raise InputError("n must be positive")
        if not 0 <= m <= n - 1:
            raise InputError(f"perturbation exponent m must lie in 0..{n - 1}")
        if order < 1:
            raise InputError("order must be positive")
        self.n, self.m, self.order = n, m, order
        self.algebra = surface_algebra(n)
        self.presentation = self.algebra.presentation
        S2 = self.presentation.S2
        # t carries lattice degree (n + 1 - m) S_2
        self.t_degree = tuple((n + 1 - m) * s for s in S2)
        g = {(1, 1, 0, 0): Fraction(1), (0, 0, n + 1, 0): Fraction(-1)}
        if order > 1:
            _padd(g, (0, 0, m, 1), Fraction(1))
        self.g = g
        self.grad = [_pderiv(g, v) for v in range(3)]

    def reduce(self, poly):
        """Normal form: replace xy by z^(n+1) - t z^m as often as possible."""
        n, m = self.n, self.m
        out = {}
        for (a, b, c, t), coeff in poly.items():
            k = min(a, b)
            for i in range(k + 1):
                if t + i >= self.order:
                    break
                e = (a - k, b - k, c + (n + 1) * (k - i) + m * i, t + i)
                _padd(out, e, coeff * comb(k, i) * (-1) ** i)
        return out

    def _to_lattice(self, poly):
        """{t power: {lattice point: coeff}}."""
        out = {}
        for (a, b, c, t), coeff in poly.items():
            lam = self.presentation.exponent(a, b, c)
            out.setdefault(t, {})
            _padd(out[t], lam, coeff)
        return out

    def _mono(self, lam):
        a, b, c = self.presentation.normal_form(lam)
        return {(a, b, c, 0): Fraction(1)}

    @lru_cache(maxsize=None)
    def product(self, lam, mu):
        p = _pmul(self._mono(lam), self._mono(mu), self.order)
        return self._to_lattice(self.reduce(p))

    @lru_cache(maxsize=None)
    def bracket(self, lam, mu):
        f, h = self._mono(lam), self._mono(mu)
        df = [_pderiv(f, v) for v in range(3)]
        dh = [_pderiv(h, v) for v in range(3)]
        dg = self.grad
        out = {}
        # det of the 3x3 matrix with rows ∇f, ∇h, ∇g_t
        for (i, j, k), sign in (
            ((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
            ((0, 2, 1), -1), ((1, 0, 2), -1), ((2, 1, 0), -1),
        ):
            term = _pmul(_pmul(df[i], dh[j], self.order), dg[k], self.order)
            for key, c in term.items():
                _padd(out, key, sign * c)
        return self._to_lattice(self.reduce(out))

    def product_cochain(self, i):
        return FamilyCochain(self, "product", i)

    def bracket_cochain(self, i):
        return FamilyCochain(self, "bracket", i)

    def coefficient_degree(self, i):
        return tuple(i * x for x in self.t_degree)


class FamilyCochain(Cochain):
    """The t^i coefficient of the deformed product or bracket."""

    def __init__(self, family, kind, i):
        super().__init__(2)
        if kind not in ("product", "bracket"):
            raise InputError(kind)
        if not 0 <= i < family.order:
            raise InputError(f"order index {i} outside 0..{family.order - 1}")
        self.family, self.kind, self.i = family, kind, i
        self.degree = family.coefficient_degree(i)
        if kind == "bracket":
            S2 = family.presentation.S2
            self.degree = tuple(x + s for x, s in zip(self.degree, S2))

    def _compute(self, keys):
        lam, mu = keys
        if self.kind == "product":
            table = self.family.product(lam, mu)
        else:
            table = self.family.bracket(lam, mu)
        return dict(table.get(self.i, {}))


def pi_g(n):
    """π_g(x^λ, x^μ) = det(λ, μ) x^(λ + μ - S_2) on A_n."""
    from .surface import MonomialBivector

    return MonomialBivector(n, 1, 1).cochain()
