"""Hochschild cochains, the Gerstenhaber bracket and the Hodge projectors.

A cochain is an n-linear map evaluated on tuples of basis keys (lattice
points for k[Λ], integer indices for finite-dimensional algebras); values
are sparse vectors ``{key: Fraction}``.  Derived cochains (sums, circle
products, differentials, permutation actions) are lazy and memoised, so
every identity is checked exactly on whatever finite set of tuples a test
chooses.  Table cochains hold explicit values on a window and are the only
representation that can leave the symbolic world; they reject brackets.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import gcd, lcm

import numpy as np

from .errors import DomainError, InputError, ResourceError, UnsupportedRepresentation

ARITY_CAP = 5


# sparse vectors --------------------------------------------------------------


def vadd(acc, v, scale=1):
    for k, c in v.items():
        x = acc.get(k, 0) + scale * c
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)
    return acc


def vscale(v, scale):
    if not scale:
        return {}
    return {k: c * scale for k, c in v.items()}


def _expand(vectors):
    """Yield (keys, coefficient) for the multilinear expansion of vectors."""
    for combo in product(*(list(v.items()) for v in vectors)):
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        yield tuple(k for k, _ in combo), coeff


# symmetric group algebra -----------------------------------------------------
#
# (f∘π)(a_1..a_n) = f(a_π(1), ..., a_π(n)); with 0-based tuples π[k] is the
# argument slot feeding position k.  Right action: (f∘x)∘y = f∘(x*y).


def perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def ga_mul(x, y):
    out = {}
    for p, a in x.items():
        for s, b in y.items():
            key = tuple(s[p[k]] for k in range(len(p)))
            out[key] = out.get(key, 0) + a * b
    return {k: v for k, v in out.items() if v}


def ga_add(x, y, scale=1):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def ga_identity(n):
    return {tuple(range(n)): Fraction(1)}


@lru_cache(maxsize=None)
def _shuffle(i, n):
    out = {}
    for first in combinations(range(n), i):
        rest = tuple(k for k in range(n) if k not in first)
        perm = first + rest
        out[perm] = Fraction(perm_sign(perm))
    return out


def shuffle_element(i, n):
    """s_{i,n-i}: signed sum of the (i, n-i) shuffles."""
    if not 0 < i < n:
        raise InputError(f"need 0 < i < n, got i={i}, n={n}")
    return dict(_shuffle(i, n))


@lru_cache(maxsize=None)
def _total_shuffle(n):
    out = {}
    for i in range(1, n):
        out = ga_add(out, _shuffle(i, n))
    return out


def total_shuffle(n):
    """s_n = s_{1,n-1} + ... + s_{n-1,1} (zero for n = 1)."""
    return dict(_total_shuffle(n))


def hodge_eigenvalue(i):
    return 2**i - 2


@lru_cache(maxsize=None)
def _projector(n, i):
    s = _total_shuffle(n)
    out = ga_identity(n)
    lam_i = hodge_eigenvalue(i)
    for j in range(1, n + 1):
        if j == i:
            continue
        lam_j = hodge_eigenvalue(j)
        factor = ga_add(s, ga_identity(n), scale=-lam_j)
        factor = {k: v / (lam_i - lam_j) for k, v in factor.items()}
        out = ga_mul(out, factor)
    return out


def projector(n, i):
    """e_n(i) as an element of Q[S_n] (Lagrange polynomial in s_n)."""
    if not 1 <= i <= n:
        raise InputError(f"Hodge index {i} outside 1..{n}")
    return dict(_projector(n, i))


# cochains --------------------------------------------------------------------


class Cochain:
    """Base class: an n-linear map on basis keys with memoised evaluation."""

    symbolic = True
    degree = None

    def __init__(self, arity):
        if arity < 0:
            raise InputError("arity must be nonnegative")
        self.arity = arity
        self._cache = {}

    def on_basis(self, keys):
        try:
            return self._cache[keys]
        except KeyError:
            pass
        if len(keys) != self.arity:
            raise InputError(f"expected {self.arity} arguments, got {len(keys)}")
        value = self._compute(keys)
        self._cache[keys] = value
        return value

    def _compute(self, keys):
        raise NotImplementedError

    def __call__(self, *vectors):
        out = {}
        for keys, c in _expand(vectors):
            vadd(out, self.on_basis(keys), c)
        return out

    def __add__(self, other):
        return Sum([(1, self), (1, other)])

    def __sub__(self, other):
        return Sum([(1, self), (-1, other)])

    def __neg__(self):
        return Sum([(-1, self)])

    def __mul__(self, scalar):
        return Sum([(Fraction(scalar), self)])

    __rmul__ = __mul__


class Sum(Cochain):
    def __init__(self, terms):
        arities = {f.arity for _, f in terms}
        terms = [(Fraction(c), f) for c, f in terms if c]
        if len(arities) > 1:
            raise InputError(f"cannot add cochains of arities {sorted(arities)}")
        super().__init__(arities.pop() if arities else 0)
        self.terms = terms
        self.symbolic = all(f.symbolic for _, f in terms)

    def _compute(self, keys):
        out = {}
        for c, f in self.terms:
            vadd(out, f.on_basis(keys), c)
        return out


class ZeroCochain(Cochain):
    def _compute(self, keys):
        return {}


class RuleCochain(Cochain):
    """f(x^λ1,..,x^λn) = c(λ1..λn) x^(λ1+..+λn - R), dropped outside Λ."""

    def __init__(self, algebra, arity, coeff, degree=None):
        super().__init__(arity)
        self.algebra = algebra
        self.coeff = coeff
        self.degree = tuple(degree) if degree is not None else algebra.zero

    def _compute(self, keys):
        target = tuple(
            sum(k[i] for k in keys) - self.degree[i] for i in range(self.algebra.dim)
        )
        if not self.algebra.contains(target):
            return {}
        c = Fraction(self.coeff(keys))
        return {target: c} if c else {}


def multiplication(algebra):
    """The commutative product μ as a 2-cochain."""
    return RuleCochain(algebra, 2, lambda keys: 1)


class PolynomialCochain(RuleCochain):
    """RuleCochain whose coefficient is a polynomial in the coordinates.

    ``terms`` maps exponent tuples of length arity*dim to rationals; the
    exponent block k applies to the coordinates of the k-th argument.
    Multilinear polynomials are the multi-additive (polyvector) cochains.
    """

    def __init__(self, algebra, arity, terms, degree=None):
        self.terms = {tuple(e): Fraction(c) for e, c in terms.items() if c}
        dim = algebra.dim
        for e in self.terms:
            if len(e) != arity * dim:
                raise InputError(f"exponent {e} does not match arity {arity}")

        def coeff(keys):
            flat = [x for k in keys for x in k]
            total = Fraction(0)
            for e, c in self.terms.items():
                t = c
                for x, p in zip(flat, e):
                    if p:
                        t *= x**p
                total += t
            return total

        super().__init__(algebra, arity, coeff, degree)

    def to_json(self):
        return {
            "arity": self.arity,
            "degree": list(self.degree),
            "terms": [[list(e), str(c)] for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, algebra, data):
        terms = {tuple(e): Fraction(c) for e, c in data["terms"]}
        return cls(algebra, int(data["arity"]), terms, data.get("degree"))


def bilinear_form_cochain(algebra, matrix, degree=None):
    """x^λ ⊗ x^μ -> (λᵀ B μ) x^(λ+μ-R): a (bi)derivation-type 2-cochain."""
    dim = algebra.dim
    terms = {}
    for i in range(dim):
        for j in range(dim):
            if matrix[i][j]:
                e = [0] * (2 * dim)
                e[i] += 1
                e[dim + j] += 1
                terms[tuple(e)] = Fraction(matrix[i][j])
    return PolynomialCochain(algebra, 2, terms, degree)


def linear_form_cochain(algebra, vector, degree=None):
    """x^λ -> <c, λ> x^(λ-R): the toric derivation of degree -R."""
    terms = {}
    for i, c in enumerate(vector):
        if c:
            e = [0] * algebra.dim
            e[i] = 1
            terms[tuple(e)] = Fraction(c)
    return PolynomialCochain(algebra, 1, terms, degree)


class TensorCochain(Cochain):
    """Multilinear map on a finite-dimensional space with basis 0..d-1."""

    def __init__(self, dimension, arity, values):
        super().__init__(arity)
        self.dimension = dimension
        self.values = {
            tuple(k): {o: Fraction(c) for o, c in v.items() if c}
            for k, v in values.items()
        }

    def _compute(self, keys):
        for k in keys:
            if not 0 <= k < self.dimension:
                raise InputError(f"basis index {k} outside 0..{self.dimension - 1}")
        return dict(self.values.get(keys, {}))

    @classmethod
    def from_array(cls, array):
        """Structure constants array[i][j][k]: e_i ⊗ e_j -> Σ_k array[i][j][k] e_k."""
        d = len(array)
        values = {}
        for i in range(d):
            for j in range(d):
                values[(i, j)] = {k: array[i][j][k] for k in range(d)}
        return cls(d, 2, values)


class Circle(Cochain):
    """f∘g with the sign (-1)^((i-1)(n+1)) on the i-th insertion."""

    def __init__(self, f, g):
        _require_symbolic(f, g)
        super().__init__(f.arity + g.arity - 1)
        self.f, self.g = f, g

    def _compute(self, keys):
        m, n = self.f.arity, self.g.arity
        out = {}
        for i in range(m):
            sign = -1 if (i * (n + 1)) % 2 else 1
            inner = self.g.on_basis(keys[i : i + n])
            if not inner:
                continue
            head, tail = keys[:i], keys[i + n :]
            for k, c in inner.items():
                vadd(out, self.f.on_basis(head + (k,) + tail), sign * c)
        return out


def _require_symbolic(*cochains):
    for f in cochains:
        if not f.symbolic:
            raise UnsupportedRepresentation(
                "circle products and brackets need symbolic (total) cochains"
            )


def circle(f, g):
    return Circle(f, g)


def gerstenhaber_bracket(f, g):
    """[f, g] = f∘g - (-1)^((m+1)(n+1)) g∘f."""
    m, n = f.arity, g.arity
    sign = -1 if ((m + 1) * (n + 1)) % 2 else 1
    return Sum([(1, Circle(f, g)), (-sign, Circle(g, f))])


class HochschildD(Cochain):
    def __init__(self, f, algebra):
        super().__init__(f.arity + 1)
        self.f = f
        self.algebra = algebra
        self.symbolic = f.symbolic

    def _compute(self, keys):
        f, alg, n = self.f, self.algebra, self.f.arity
        out = {}
        vadd(out, alg.mul({keys[0]: 1}, f.on_basis(keys[1:])))
        for i in range(n):
            prod_ = alg.mul_basis(keys[i], keys[i + 1])
            sign = -1 if (i + 1) % 2 else 1
            for k, c in prod_.items():
                vadd(out, f.on_basis(keys[:i] + (k,) + keys[i + 2 :]), sign * c)
        sign = -1 if (n + 1) % 2 else 1
        vadd(out, alg.mul(f.on_basis(keys[:-1]), {keys[-1]: 1}), sign)
        return out


def hochschild_d(f, algebra):
    return HochschildD(f, algebra)


class Permuted(Cochain):
    """f∘x for x in Q[S_n]."""

    def __init__(self, f, element):
        super().__init__(f.arity)
        self.f = f
        self.element = element
        self.symbolic = f.symbolic

    def _compute(self, keys):
        out = {}
        for perm, c in self.element.items():
            vadd(out, self.f.on_basis(tuple(keys[p] for p in perm)), c)
        return out


def _check_cap(n, cap):
    cap = ARITY_CAP if cap is None else cap
    if n > cap:
        raise ResourceError(f"arity {n} exceeds the configured cap {cap}")


def shuffle_apply(f, element, cap=None):
    _check_cap(f.arity, cap)
    if isinstance(f, TableCochain):
        return f.permute(element)
    return Permuted(f, element)


def hodge_project(f, i, cap=None):
    """e_n(i) f."""
    n = f.arity
    if not 1 <= i <= max(n, 1):
        raise InputError(f"Hodge index {i} outside 1..{n}")
    if n == 1:
        return f
    _check_cap(n, cap)
    return shuffle_apply(f, _projector(n, i), cap)


def hodge_components(f, cap=None):
    return {i: hodge_project(f, i, cap) for i in range(1, f.arity + 1)}


# table cochains --------------------------------------------------------------


class TableCochain(Cochain):
    """Values c(t)·x^(Σt - R) on window tuples t, stored as exact ints/denom."""

    symbolic = False

    def __init__(self, algebra, window, arity, numerators, denominator=1, degree=None):
        super().__init__(arity)
        self.algebra = algebra
        self.window = tuple(window)
        self.index = {lam: k for k, lam in enumerate(self.window)}
        self.degree = tuple(degree) if degree is not None else algebra.zero
        num = np.asarray(numerators)
        if num.shape != (len(self.window),) * arity:
            raise InputError(f"table shape {num.shape} does not match window^arity")
        self.numerators = num
        self.denominator = int(denominator)
        if self.denominator <= 0:
            raise InputError("denominator must be positive")

    def value(self, keys):
        try:
            idx = tuple(self.index[k] for k in keys)
        except KeyError:
            raise DomainError(keys) from None
        return Fraction(int(self.numerators[idx]), self.denominator)

    def _compute(self, keys):
        c = self.value(keys)
        target = tuple(
            sum(k[i] for k in keys) - self.degree[i] for i in range(self.algebra.dim)
        )
        if not c or not self.algebra.contains(target):
            return {}
        return {target: c}

    def _like(self, numerators, denominator):
        return TableCochain(
            self.algebra, self.window, self.arity, numerators, denominator, self.degree
        )

    def permute(self, element):
        """f∘x computed on the whole table by axis transposition."""
        if not element:
            return self._like(np.zeros_like(self.numerators), 1)
        scale = lcm(*(Fraction(c).denominator for c in element.values()))
        ints = {p: int(Fraction(c) * scale) for p, c in element.items()}
        acc = _safe_dtype(self.numerators, sum(abs(v) for v in ints.values()))
        out = np.zeros(acc.shape, dtype=acc.dtype)
        for perm, c in ints.items():
            inv = [0] * len(perm)
            for k, p in enumerate(perm):
                inv[p] = k
            out = out + c * acc.transpose(inv)
        return self._like(*_reduce(out, self.denominator * scale))

    def scaled_equal(self, other):
        if self.window != other.window or self.degree != other.degree:
            return False
        a = _safe_dtype(self.numerators, other.denominator)
        b = _safe_dtype(other.numerators, self.denominator)
        return bool(np.array_equal(a * other.denominator, b * self.denominator))

    def __add__(self, other):
        if isinstance(other, TableCochain):
            return self.combine([(1, self), (1, other)])
        return super().__add__(other)

    def __sub__(self, other):
        if isinstance(other, TableCochain):
            return self.combine([(1, self), (-1, other)])
        return super().__sub__(other)

    @staticmethod
    def combine(terms):
        first = terms[0][1]
        den = lcm(*(f.denominator * Fraction(c).denominator for c, f in terms))
        bound = sum(abs(int(Fraction(c) * den / f.denominator)) for c, f in terms)
        out = None
        for c, f in terms:
            mult = int(Fraction(c) * den / f.denominator)
            part = mult * _safe_dtype(f.numerators, bound)
            out = part if out is None else out + part
        return first._like(*_reduce(out, den))

    def is_zero(self):
        return not np.any(self.numerators)


_INT64_SAFE = 2**62


def _safe_dtype(arr, multiplier):
    arr = np.asarray(arr)
    if arr.dtype == object:
        return arr
    peak = int(np.max(np.abs(arr))) if arr.size else 0
    if peak * max(int(multiplier), 1) >= _INT64_SAFE:
        return arr.astype(object)
    return arr.astype(np.int64)


def _reduce(arr, den):
    g = den
    for v in arr.ravel():
        g = gcd(g, int(v))
        if g == 1:
            break
    if g > 1:
        arr = arr // g
        den //= g
    return arr, den


def random_table(algebra, window, arity, rng, low=-5, high=5, degree=None):
    shape = (len(window),) * arity
    values = rng.integers(low, high + 1, size=shape, dtype=np.int64)
    return TableCochain(algebra, window, arity, values, 1, degree)


def multiplication_table(algebra, window):
    w = len(window)
    return TableCochain(algebra, window, 2, np.ones((w, w), dtype=np.int64))


def skew_table(algebra, window, rng, low=-5, high=5, degree=None):
    w = len(window)
    raw = rng.integers(low, high + 1, size=(w, w), dtype=np.int64)
    return TableCochain(algebra, window, 2, raw - raw.T, 1, degree)


# evaluation helpers ----------------------------------------------------------


def find_nonzero(f, tuples):
    """First tuple where f is nonzero, with its value; None when f vanishes."""
    for t in tuples:
        v = f.on_basis(tuple(t))
        if v:
            return tuple(t), v
    return None


def vanishes_on(f, tuples):
    return find_nonzero(f, tuples) is None


def agree_on(f, g, tuples):
    return vanishes_on(f - g, tuples)


def window_tuples(window, arity):
    return product(window, repeat=arity)


def closed_tuples(algebra, window, arity):
    """Window tuples all of whose consecutive partial products stay in the window."""
    inside = set(window)
    for t in product(window, repeat=arity):
        ok = True
        for i in range(arity):
            acc = t[i]
            for j in range(i + 1, arity):
                acc = tuple(a + b for a, b in zip(acc, t[j]))
                if acc not in inside:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield t


def sample_tuples(window, arity, rng, count):
    w = list(window)
    return [tuple(w[int(i)] for i in rng.integers(0, len(w), size=arity)) for _ in range(count)]


# random symbolic cochains ------------------------------------------------------


def random_polynomial_cochain(
    algebra, arity, rng, degree=None, max_degree=2, n_terms=4, coeff_range=4, symmetry=None
):
    """Random PolynomialCochain; symmetry in {None, 'sym', 'skew'} for arity 2."""
    dim = algebra.dim
    terms = {}
    for _ in range(n_terms):
        e = [0] * (arity * dim)
        for _ in range(int(rng.integers(0, max_degree + 1))):
            e[int(rng.integers(0, arity * dim))] += 1
        c = int(rng.integers(-coeff_range, coeff_range + 1))
        if c:
            terms[tuple(e)] = terms.get(tuple(e), 0) + Fraction(c)
    if symmetry is not None:
        if arity != 2:
            raise InputError("symmetrisation is only implemented for arity 2")
        sign = 1 if symmetry == "sym" else -1
        sym = {}
        for e, c in terms.items():
            swapped = e[dim:] + e[:dim]
            sym[e] = sym.get(e, 0) + c
            sym[swapped] = sym.get(swapped, 0) + sign * c
        terms = sym
    return PolynomialCochain(algebra, arity, terms, degree)


def random_bilinear_cochain(algebra, rng, degree=None, symmetry=None, coeff_range=4):
    dim = algebra.dim
    m = rng.integers(-coeff_range, coeff_range + 1, size=(dim, dim))
    if symmetry == "sym":
        m = m + m.T
    elif symmetry == "skew":
        m = m - m.T
    return bilinear_form_cochain(algebra, [[int(x) for x in row] for row in m], degree)


def all_permutations(n):
    return list(permutations(range(n)))
