"""The dgla of Hodge-graded Hochschild cochains controlling Poisson deformations.

A TotalCochain of total degree m is a tuple of m-cochains (f_1, ..., f_m)
with f_j in the Hodge piece of weight j; its dgla degree is m - 1.  The
bracket [F, G]_p keeps only the weight i + j - 1 part of [f_i, g_j] and the
differential is [μ + μ_p, .]_p.

Coefficients in an Artin ring k[t_1..t_r]/m^ν are handled as dicts from
exponent tuples to TotalCochains; every identity is checked exactly on a
finite, caller-chosen set of argument tuples.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial

from .errors import InputError, InvalidStructure
from .hochschild import (
    Cochain,
    Sum,
    ZeroCochain,
    find_nonzero,
    gerstenhaber_bracket,
    hodge_project,
    vadd,
    vscale,
)
from .linalg import solve

# total cochains ----------------------------------------------------------------


class TotalCochain:
    def __init__(self, degree, components):
        if degree < 1:
            raise InputError("total degree must be positive")
        self.degree = degree
        comps = {}
        for j, f in dict(components).items():
            if not 1 <= j <= degree:
                raise InputError(f"Hodge weight {j} outside 1..{degree}")
            if f.arity != degree:
                raise InputError(f"component {j} has arity {f.arity}, expected {degree}")
            comps[j] = f
        self.components = comps

    @classmethod
    def from_cochain(cls, f):
        """Split an arbitrary m-cochain into its Hodge components."""
        m = f.arity
        return cls(m, {j: hodge_project(f, j) for j in range(1, m + 1)})

    def component(self, j):
        return self.components.get(j)

    def __add__(self, other):
        return combine([(1, self), (1, other)])

    def __sub__(self, other):
        return combine([(1, self), (-1, other)])

    def __neg__(self):
        return combine([(-1, self)])

    def scale(self, c):
        return combine([(c, self)])

    def find_nonzero(self, tuples):
        """(weight, tuple, value) of the first nonzero evaluation, or None."""
        tuples = list(tuples)
        for j in sorted(self.components):
            hit = find_nonzero(self.components[j], tuples)
            if hit is not None:
                return (j,) + hit
        return None

    def vanishes_on(self, tuples):
        return self.find_nonzero(tuples) is None

    def eigen_check(self, tuples):
        """Each component satisfies f_j∘s_m = (2^j - 2) f_j on the tuples."""
        from .hochschild import hodge_eigenvalue, shuffle_apply, total_shuffle

        tuples = list(tuples)
        s = total_shuffle(self.degree)
        for j, f in self.components.items():
            lhs = shuffle_apply(f, s) - f * hodge_eigenvalue(j)
            if find_nonzero(lhs, tuples) is not None:
                return False
        return True


def combine(terms):
    terms = list(terms)
    if not terms:
        raise InputError("empty combination")
    degree = terms[0][1].degree
    if any(F.degree != degree for _, F in terms):
        raise InputError("cannot add total cochains of different degrees")
    terms = [(Fraction(c), F) for c, F in terms if c]
    weights = sorted({j for _, F in terms for j in F.components})
    comps = {}
    for j in weights:
        parts = [(c, F.components[j]) for c, F in terms if j in F.components]
        comps[j] = parts[0][1] if len(parts) == 1 and parts[0][0] == 1 else Sum(parts)
    return TotalCochain(degree, comps)


def zero_total(degree):
    return TotalCochain(degree, {})


def p_bracket(F, G):
    """[F, G]_p: weight w collects e(w)[f_i, g_j] over i + j - 1 = w."""
    m, n = F.degree, G.degree
    total = m + n - 1
    comps = {}
    for w in range(1, total + 1):
        parts = [
            (1, gerstenhaber_bracket(F.components[i], G.components[j]))
            for i in sorted(F.components)
            for j in sorted(G.components)
            if i + j - 1 == w
        ]
        if parts:
            comps[w] = hodge_project(Sum(parts), w)
    return TotalCochain(total, comps)


def structure(mu, mu_p):
    comps = {1: mu}
    if mu_p is not None:
        comps[2] = mu_p
    return TotalCochain(2, comps)


def tilde_d(F, mu, mu_p):
    return p_bracket(structure(mu, mu_p), F)


def validate_structure(mu, mu_p, tuples):
    """Raise InvalidStructure unless [μ, μ_p] = 0 and e_3(3)[μ_p, μ_p] = 0 on tuples."""
    tuples = list(tuples)
    hit = find_nonzero(gerstenhaber_bracket(mu, mu_p), tuples)
    if hit is not None:
        raise InvalidStructure(f"d μ_p != 0 at {hit[0]}")
    jac = hodge_project(gerstenhaber_bracket(mu_p, mu_p), 3)
    hit = find_nonzero(jac, tuples)
    if hit is not None:
        raise InvalidStructure(f"Jacobi identity fails at {hit[0]}")


# Artin coefficients ------------------------------------------------------------


@dataclass(frozen=True)
class ArtinRing:
    """k[t_1..t_r] / m^ν."""

    nvars: int
    order: int

    def __post_init__(self):
        if self.nvars < 1 or self.order < 2:
            raise InputError("need at least one variable and order >= 2")

    def monomials(self, positive=True):
        """Exponent tuples of total degree 1..ν-1 (0..ν-1 when not positive)."""
        lo = 1 if positive else 0
        out = []
        for d in range(lo, self.order):
            for combo in combinations_with_replacement(range(self.nvars), d):
                e = [0] * self.nvars
                for v in combo:
                    e[v] += 1
                out.append(tuple(e))
        return out

    def mul(self, a, b):
        e = tuple(x + y for x, y in zip(a, b))
        return e if sum(e) < self.order else None

    def variable(self, k=0, power=1):
        e = [0] * self.nvars
        e[k] = power
        return tuple(e)

    @classmethod
    def parse(cls, spec):
        """'t^3' -> k[t]/t^3; 't1,t2^2' -> k[t1,t2]/m^2."""
        spec = spec.replace(" ", "")
        if "^" not in spec:
            raise InputError(f"Artin spec {spec!r} needs a truncation like t^3")
        names, _, order = spec.rpartition("^")
        try:
            order = int(order)
        except ValueError:
            raise InputError(f"bad truncation order in {spec!r}") from None
        nvars = len([x for x in names.split(",") if x])
        return cls(nvars, order)


def _series_bracket(B, X, Y):
    out = {}
    for a, F in X.items():
        for b, G in Y.items():
            e = B.mul(a, b)
            if e is None:
                continue
            term = p_bracket(F, G)
            out[e] = out[e] + term if e in out else term
    return out


def _series_add(X, Y, scale=1):
    out = dict(X)
    for e, G in Y.items():
        out[e] = out[e] + G.scale(scale) if e in out else G.scale(scale)
    return out


def _series_scale(X, c):
    return {e: F.scale(c) for e, F in X.items()}


def _check_positive(B, x):
    for e in x:
        if sum(e) == 0:
            raise InputError("deformation elements must have zero constant term")
        if sum(e) >= B.order:
            raise InputError(f"monomial {e} vanishes in the Artin ring")


def mc_residual(x, B, mu, mu_p):
    """d̃x + ½[x, x]_p as {monomial: TotalCochain of degree 3}."""
    _check_positive(B, x)
    M = structure(mu, mu_p)
    out = {e: p_bracket(M, F) for e, F in x.items()}
    half = _series_scale(_series_bracket(B, x, x), Fraction(1, 2))
    return _series_add(out, half)


def mc_check(x, B, mu, mu_p, tuples):
    """(holds, residual witnesses {monomial: (weight, tuple, value)})."""
    tuples = list(tuples)
    residual = mc_residual(x, B, mu, mu_p)
    bad = {}
    for e in sorted(residual):
        hit = residual[e].find_nonzero(tuples)
        if hit is not None:
            bad[e] = hit
    return not bad, bad


def gauge_act(alpha, x, B, mu, mu_p):
    """x + Σ_k [α,.]^k/(k+1)! ([α, x] - d̃α), summed to the nilpotency order."""
    _check_positive(B, alpha)
    _check_positive(B, x)
    for F in alpha.values():
        if F.degree != 1:
            raise InputError("gauge parameters live in total degree 1")
    M = structure(mu, mu_p)
    d_alpha = {e: p_bracket(M, F) for e, F in alpha.items()}
    term = _series_add(_series_bracket(B, alpha, x), d_alpha, -1)
    out = dict(x)
    k = 0
    while term:
        out = _series_add(out, term, Fraction(1, factorial(k + 1)))
        term = _series_bracket(B, alpha, term)
        k += 1
    return out


def bch(a, b, B):
    """log(exp(a) exp(b)) through fourth order; exact when ν <= 5."""
    if B.order > 5:
        raise InputError("BCH composition is implemented for ν <= 5")

    def br(X, Y):
        return _series_bracket(B, X, Y)

    ab = br(a, b)
    out = _series_add(a, b)
    out = _series_add(out, ab, Fraction(1, 2))
    out = _series_add(out, br(a, ab), Fraction(1, 12))
    out = _series_add(out, br(b, br(b, a)), Fraction(1, 12))
    out = _series_add(out, br(b, br(a, ab)), Fraction(-1, 24))
    return out


def series_equal(X, Y, tuples):
    tuples = list(tuples)
    for e in set(X) | set(Y):
        if e in X and e in Y:
            diff = X[e] - Y[e]
        else:
            diff = X.get(e) or Y.get(e)
        if diff.find_nonzero(tuples) is not None:
            return False
    return True


# conjugation recipe ------------------------------------------------------------
#
# Elements of A⊗B are {monomial: sparse vector}.  A series of cochains
# {monomial: Cochain} acts B-multilinearly.


def _apply(B, series, args):
    out = {}
    for e, f in series.items():
        for combo in product(*(list(a.items()) for a in args)):
            mono = e
            for e2, _ in combo:
                mono = B.mul(mono, e2)
                if mono is None:
                    break
            if mono is None:
                continue
            value = f(*(v for _, v in combo))
            if value:
                out[mono] = vadd(out.get(mono, {}), value)
    return {e: v for e, v in out.items() if v}


def _elt_add(x, y, scale=1):
    out = {e: dict(v) for e, v in x.items()}
    for e, v in y.items():
        out[e] = vadd(out.get(e, {}), v, scale)
    return {e: v for e, v in out.items() if v}


def exp_operator(B, alpha_series, element, sign=1):
    """exp(sign·α) applied to an element of A⊗B."""
    out = dict(element)
    term = element
    k = 1
    while term:
        term = _apply(B, alpha_series, [term])
        term = {e: vscale(v, Fraction(sign, k)) for e, v in term.items()}
        out = _elt_add(out, term)
        k += 1
    return out


def conjugated(B, alpha_series, structure_series, a, b):
    """exp(α)(m(exp(-α)a, exp(-α)b)) for a bilinear series m."""
    ea = exp_operator(B, alpha_series, a, -1)
    eb = exp_operator(B, alpha_series, b, -1)
    return exp_operator(B, alpha_series, _apply(B, structure_series, [ea, eb]), 1)


def conjugation_check(alpha, x, y, B, mu, mu_p, pairs):
    """y (the gauge image of x) against the exp(α)-conjugation of μ + x.

    Checks both the product (weight 1) and the bracket (weight 2) pointwise
    on the given pairs of basis keys; returns the first failing pair or None.
    """
    zero = (0,) * B.nvars
    alpha_series = {e: F.components[1] for e, F in alpha.items() if 1 in F.components}
    for weight, base in ((1, mu), (2, mu_p)):
        old = {e: F.components[weight] for e, F in x.items() if weight in F.components}
        new = {e: F.components[weight] for e, F in y.items() if weight in F.components}
        if base is not None:
            old[zero] = base
            new[zero] = base
        for lam, nu in pairs:
            a = {zero: {lam: Fraction(1)}}
            b = {zero: {nu: Fraction(1)}}
            lhs = _apply(_Unit(B), new, [a, b])
            rhs = conjugated(_Unit(B), alpha_series, old, a, b)
            if _elt_add(lhs, rhs, -1):
                return weight, (lam, nu)
    return None


class _Unit:
    """Artin ring view that also admits the zero monomial (the unit)."""

    def __init__(self, B):
        self.B = B
        self.nvars = B.nvars

    def mul(self, a, b):
        e = tuple(x + y for x, y in zip(a, b))
        return e if sum(e) < self.B.order else None


# order-by-order extension --------------------------------------------------------


class SupportedCochain(Cochain):
    """Finitely supported total cochain: c(t) x^(Σt - R) on listed tuples, 0 elsewhere."""

    def __init__(self, algebra, arity, values, degree):
        super().__init__(arity)
        self.algebra = algebra
        self.values = {tuple(k): Fraction(v) for k, v in values.items() if v}
        self.degree = tuple(degree)

    def _compute(self, keys):
        c = self.values.get(keys)
        if not c:
            return {}
        target = tuple(
            sum(k[i] for k in keys) - self.degree[i] for i in range(self.algebra.dim)
        )
        if not self.algebra.contains(target):
            return {}
        return {target: c}


def bounded_tuples(algebra, d, arity):
    """Window tuples whose total weight is <= d (so every partial sum stays inside)."""
    window = algebra.window(d)
    out = []
    for t in product(window, repeat=arity):
        if sum(algebra.degree_weight(x) for x in t) <= d:
            out.append(t)
    return out


def _unknown_basis(algebra, d, degree, bracket_degree):
    """Sym (weight 1) and skew (weight 2) delta 2-cochains on the window."""
    window = algebra.window(d)
    basis = []
    for i, lam in enumerate(window):
        for mu in window[i:]:
            total = tuple(a + b for a, b in zip(lam, mu))
            if algebra.degree_weight(total) > d:
                continue
            if algebra.contains(tuple(t - r for t, r in zip(total, degree))):
                sym = {(lam, mu): 1, (mu, lam): 1}
                basis.append((1, SupportedCochain(algebra, 2, sym, degree)))
            if lam != mu and algebra.contains(
                tuple(t - r for t, r in zip(total, bracket_degree))
            ):
                skew = {(lam, mu): 1, (mu, lam): -1}
                basis.append((2, SupportedCochain(algebra, 2, skew, bracket_degree)))
    return basis


def _shifted(degree, mu_p):
    shift = getattr(mu_p, "degree", None)
    if shift is None:
        return tuple(degree)
    return tuple(a + b for a, b in zip(degree, shift))


@dataclass
class ExtensionResult:
    extended: dict  # the new series when solvable
    obstruction: dict  # {monomial: TotalCochain} when not
    solved: bool
    unknowns: int
    equations: int


def mc_extend(x, B, mu, mu_p, algebra, k, degree, d=6, bracket_degree=None):
    """Extend x (MC mod t^k, one variable) to an MC element mod t^(k+1).

    The order-k term is searched among finitely supported 2-cochains of the
    given lattice degree on the window of weight d (the skew part carries
    ``bracket_degree``, by default degree + deg μ_p), and the equation
    d̃ y = -(t^k part of ½[x, x]_p) is imposed on all tuples of total
    weight <= d.  Returns the obstruction when no solution exists.
    """
    if B.nvars != 1:
        raise InputError("order-by-order extension is implemented for one variable")
    if not 1 <= k < B.order:
        raise InputError(f"order {k} outside 1..{B.order - 1}")
    target = B.variable(0, k)
    lower = {e: F for e, F in x.items() if sum(e) < k}
    half = _series_scale(_series_bracket(B, lower, lower), Fraction(1, 2))
    obstruction = half.get(target)
    tuples = bounded_tuples(algebra, d, 3)
    if obstruction is None or obstruction.vanishes_on(tuples):
        new = dict(lower)
        return ExtensionResult(new, {}, True, 0, 0)
    if bracket_degree is None:
        bracket_degree = _shifted(degree, mu_p)
    basis = _unknown_basis(algebra, d, degree, bracket_degree)
    M = structure(mu, mu_p)
    images = []
    for weight, delta in basis:
        images.append(p_bracket(M, TotalCochain(2, {weight: delta})))
    rows, rhs = [], []
    for w in (1, 2, 3):
        for t in tuples:
            keys = set()
            cols = []
            for img in images:
                f = img.components.get(w)
                v = f.on_basis(t) if f is not None else {}
                cols.append(v)
                keys.update(v)
            o = obstruction.components.get(w)
            ov = o.on_basis(t) if o is not None else {}
            keys.update(ov)
            for key in sorted(keys):
                rows.append([c.get(key, 0) for c in cols])
                rhs.append(-ov.get(key, 0))
    sol = solve(rows, rhs, len(basis)) if rows else [0] * len(basis)
    if sol is None:
        return ExtensionResult({}, {target: obstruction}, False, len(basis), len(rows))
    comps = {1: {}, 2: {}}
    for (weight, delta), c in zip(basis, sol):
        if c:
            for key, v in delta.values.items():
                comps[weight][key] = comps[weight].get(key, 0) + c * v
    degrees = {1: tuple(degree), 2: tuple(bracket_degree)}
    term = TotalCochain(
        2,
        {
            w: SupportedCochain(algebra, 2, vals, degrees[w])
            for w, vals in comps.items()
            if vals
        },
    )
    new = dict(lower)
    new[target] = term
    return ExtensionResult(new, {}, True, len(basis), len(rows))


# the finite-dimensional equivalence ----------------------------------------------


def _is_symmetric(f, dim):
    return all(f.on_basis((i, j)) == f.on_basis((j, i)) for i in range(dim) for j in range(dim))


def _is_skew(f, dim):
    return all(
        f.on_basis((i, j)) == vscale(f.on_basis((j, i)), -1)
        for i in range(dim)
        for j in range(dim)
    )


def leibniz_defect(mu, mu_p):
    """F(a,b,c) = μ_p(a, bc) - μ_p(a,b)c - μ_p(a,c)b as a 3-cochain."""

    class _F(Cochain):
        def _compute(self, keys):
            a, b, c = ({k: 1} for k in keys)
            out = {}
            vadd(out, mu_p(a, mu(b, c)))
            vadd(out, mu(mu_p(a, b), c), -1)
            vadd(out, mu(mu_p(a, c), b), -1)
            return out

    return _F(3)


def cyclic(f):
    """(a, b, c) -> f(c, a, b)."""
    from .hochschild import Permuted

    return Permuted(f, {(2, 0, 1): 1})


def poisson_axiom_equivalence(mu, mu_p, dim):
    """Compare the Poisson axioms of (μ, μ_p) with the MC residuals.

    μ and μ_p are TensorCochains on a space with basis 0..dim-1.
    """
    if not _is_symmetric(mu, dim):
        raise InputError("μ' must be symmetric")
    if not _is_skew(mu_p, dim):
        raise InputError("μ'_p must be skew")
    triples = list(product(range(dim), repeat=3))

    def ev(f, t):
        return f.on_basis(t)

    def assoc(t):
        a, b, c = ({k: 1} for k in t)
        return mu(mu(a, b), c) == mu(a, mu(b, c))

    def jac(t):
        a, b, c = ({k: 1} for k in t)
        out = {}
        vadd(out, mu_p(a, mu_p(b, c)))
        vadd(out, mu_p(b, mu_p(c, a)))
        vadd(out, mu_p(c, mu_p(a, b)))
        return not out

    F = leibniz_defect(mu, mu_p)
    axioms = {
        "commutative": True,
        "associative": all(assoc(t) for t in triples),
        "jacobi": all(jac(t) for t in triples),
        "leibniz": all(not ev(F, t) for t in triples),
    }
    r_mu = Sum([(Fraction(1, 2), gerstenhaber_bracket(mu, mu))])
    r_mix = gerstenhaber_bracket(mu, mu_p)
    r_p = Sum([(Fraction(1, 2), hodge_project(gerstenhaber_bracket(mu_p, mu_p), 3))])
    residuals = {
        "mu_mu": find_nonzero(r_mu, triples) is None,
        "mu_mu_p": find_nonzero(r_mix, triples) is None,
        "mu_p_mu_p": find_nonzero(r_p, triples) is None,
    }
    # pointwise identities from the Leibniz computation
    pm = gerstenhaber_bracket(mu_p, mu)
    ident1 = Sum([(1, F), (1, cyclic(F)), (1, pm)])
    ident2 = Sum(
        [
            (2, F),
            (1, pm),
            (1, _perm(pm, (0, 2, 1))),
            (-1, _perm(pm, (1, 0, 2))),
        ]
    )
    identities = {
        "F_plus_cyclic": find_nonzero(ident1, triples) is None,
        "minus_two_F": find_nonzero(ident2, triples) is None,
    }
    return {
        "axioms": axioms,
        "residuals_vanish": residuals,
        "identities": identities,
        "consistent": all(axioms.values()) == all(residuals.values())
        and axioms["associative"] == residuals["mu_mu"]
        and axioms["jacobi"] == residuals["mu_p_mu_p"]
        and axioms["leibniz"] == residuals["mu_mu_p"],
    }


def _perm(f, perm):
    from .hochschild import Permuted

    return Permuted(f, {perm: 1})
