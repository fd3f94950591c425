"""Cotangent cohomology and Poisson cohomology of the A_n surfaces.

Degrees follow the cochain convention used throughout the package: a
cochain of degree D sends x^λ1, .., x^λk to a multiple of x^(Σλ - D).  The
graded piece T¹(-R) therefore sits in degree R, and π_g has degree S_2.

A_n = k[x, y, z]/(g), g = xy - z^(n+1), with x, y, z the monomials of S_1,
S_3, S_2.  Every graded piece of A_n is at most one-dimensional, so the
cotangent complex of the hypersurface splits into tiny integer matrices.
"""

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra import surface_algebra
from .errors import InputError, InvariantViolation, UnsupportedRepresentation
from .hochschild import (
    Cochain,
    RuleCochain,
    find_nonzero,
    gerstenhaber_bracket,
    hodge_project,
    linear_form_cochain,
    multiplication,
)
from .linalg import nullspace, rank

DEFAULT_WINDOW = 12


def default_window():
    """Window bound from TORICDEF_WINDOW, falling back to DEFAULT_WINDOW."""
    raw = os.environ.get("TORICDEF_WINDOW")
    if raw is None or raw == "":
        return DEFAULT_WINDOW
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"TORICDEF_WINDOW must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError("TORICDEF_WINDOW must be positive")
    return value


def _add(u, v, k=1):
    return tuple(a + k * b for a, b in zip(u, v))


def det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def degree_window(n, d):
    """Lattice degrees R with |<a, R>| <= d for both rays of the cone of A_n."""
    A = surface_algebra(n)
    a1, a2 = A.rays
    out = []
    # the rays form a basis of Q^2 up to index n + 1, so bound coordinates generously
    span = d * (n + 2)
    for R in product(range(-span, span + 1), repeat=2):
        w1 = a1[0] * R[0] + a1[1] * R[1]
        w2 = a2[0] * R[0] + a2[1] * R[1]
        if abs(w1) <= d and abs(w2) <= d:
            out.append(R)
    return out


# T¹ from the hypersurface cotangent complex -----------------------------------


class _Hypersurface:
    def __init__(self, n):
        self.n = n
        self.algebra = surface_algebra(n)
        p = self.algebra.presentation
        self.S = (p.S1, p.S3, p.S2)  # degrees of x, y, z
        self.g_degree = tuple((n + 1) * s for s in p.S2)
        # ∂g/∂x = y, ∂g/∂y = x, ∂g/∂z = -(n+1) z^n, as (coefficient, degree)
        self.partials = ((1, p.S3), (1, p.S1), (-(n + 1), tuple(n * s for s in p.S2)))

    def piece(self, delta):
        return 1 if self.algebra.contains(delta) else 0


def _t1_first(H, R):
    """dim coker(⊕ A_(deg x_i - R) -> A_(deg g - R), θ -> Σ θ_i ∂_i g)."""
    target = _add(H.g_degree, R, -1)
    if not H.piece(target):
        return 0
    cols = [c for (c, _), s in zip(H.partials, H.S) if H.piece(_add(s, R, -1))]
    return 1 - rank([cols]) if cols else 1


def _t1_second(H, R):
    """Middle cohomology of Λ² -> Θ -> A given by contraction with dg.

    C0 = ⊕_(i<j) A_(deg x_i + deg x_j - R)
    C1 = ⊕_i A_(deg x_i + deg g - R)
    C2 = A_(2 deg g - R)
    """
    S, g = H.S, H.g_degree
    pairs = [(0, 1), (0, 2), (1, 2)]
    c0 = [p for p in pairs if H.piece(_add(_add(S[p[0]], S[p[1]]), R, -1))]
    c1 = [i for i in range(3) if H.piece(_add(_add(S[i], g), R, -1))]
    c2 = H.piece(_add(_add(g, g), R, -1))
    if not c1:
        return 0
    # η_ij -> θ_i = η ∂_j g, θ_j = -η ∂_i g (only components landing in C1)
    d0 = [[0] * len(c0) for _ in c1]
    for col, (i, j) in enumerate(c0):
        for row, k in enumerate(c1):
            if k == i:
                d0[row][col] = H.partials[j][0]
            elif k == j:
                d0[row][col] = -H.partials[i][0]
    d1 = [[H.partials[k][0] for k in c1]] if c2 else []
    r0 = rank(d0, len(c0)) if c0 else 0
    r1 = rank(d1, len(c1)) if d1 else 0
    return len(c1) - r1 - r0


@lru_cache(maxsize=None)
def _t1_pair(n, R):
    H = _hypersurface(n)
    return _t1_first(H, R), _t1_second(H, R)


@lru_cache(maxsize=None)
def _hypersurface(n):
    return _Hypersurface(n)


def surface_t1(n, R):
    """(dim T¹_(1)(-R), dim T¹_(2)(-R)) for A_n."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"surface index n must be a positive integer, got {n!r}")
    return _t1_pair(n, tuple(R))


def surface_t1_dims(n, window=None):
    """{R: (dim T¹_(1), dim T¹_(2))} over the degree window; zeros included."""
    d = default_window() if window is None else window
    return {R: surface_t1(n, R) for R in degree_window(n, d)}


def expected_t1_degrees(n):
    S2 = surface_algebra(n).presentation.S2
    return [tuple(k * s for s in S2) for k in range(2, n + 2)]


# the E_1 page ------------------------------------------------------------------


@dataclass
class SpectralPage:
    """E_1^(j,k) = H^(j+k-1)_(j); values are ints, "module" or "unknown"."""

    n: int
    entries: dict = field(default_factory=dict)  # (j, k) -> value
    columns: int = 0

    def entry(self, j, k):
        return self.entries.get((j, k), 0)

    def to_json(self):
        return {
            "schema": 1,
            "n": self.n,
            "columns": self.columns,
            "entries": [
                {"j": j, "k": k, "hochschild": f"H^{j + k - 1}_({j})", "value": v}
                for (j, k), v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, data):
        page = cls(int(data["n"]), {}, int(data["columns"]))
        for e in data["entries"]:
            page.entries[(int(e["j"]), int(e["k"]))] = e["value"]
        return page


def e1_page(n, columns=5):
    """E_1 up to column j = columns, for the rows that carry something.

    Column j = 1: H^0_(1) = 0 (no constants in positive Hodge weight),
    H^1_(1) a module, H^2_(1) = T¹_(1) of dim n, H^3_(1) = 0 and above.
    Column 2: H^2_(2) a module, H^3_(2) = T¹_(2) of dim n, H^4_(2) unknown.
    Column j >= 3: only H^(2j-2)_(j) and H^(2j-1)_(j), both of dim n.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"surface index n must be a positive integer, got {n!r}")
    if columns < 2:
        raise InputError("need at least two columns")
    total = sum(a for a, _ in surface_t1_dims(n, 2 * (n + 2)).values())
    page = SpectralPage(n, {}, columns)
    # the spectral sequence starts at H^j_(j) in column j; lower degrees vanish
    page.entries[(1, 1)] = "module"
    page.entries[(1, 2)] = total
    page.entries[(1, 3)] = 0
    page.entries[(2, 1)] = "module"
    page.entries[(2, 2)] = sum(b for _, b in surface_t1_dims(n, 2 * (n + 2)).values())
    page.entries[(2, 3)] = "unknown"
    for j in range(3, columns + 1):
        # H^(2j-2)_(j) = T^(j-2)_(j) sits at k = j - 1; H^(2j-1)_(j) at k = j
        page.entries[(j, j - 1)] = n
        page.entries[(j, j)] = n
    return page


# Poisson bivectors of monomial type -----------------------------------------------


@dataclass(frozen=True)
class MonomialBivector:
    """μ_p(x^λ, x^μ) = b det(λ, μ) x^(λ + μ - m S_2) on A_n.

    Every bivector in two variables satisfies Jacobi, so the only condition
    is support: λ + μ - m S_2 must stay in Λ whenever det(λ, μ) != 0, which
    holds exactly for m <= 1.  π_g is (b, m) = (1, 1).
    """

    n: int
    b: Fraction = Fraction(1)
    m: int = 1

    def __post_init__(self):
        object.__setattr__(self, "b", Fraction(self.b))
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"surface index n must be a positive integer, got {self.n!r}")
        if self.b and self.m > 1:
            raise UnsupportedRepresentation(
                f"b det(λ,μ) x^(λ+μ-{self.m}S_2) is not a biderivation of A_{self.n}: "
                "the product of x and z leaves Λ"
            )

    @property
    def algebra(self):
        return surface_algebra(self.n)

    @property
    def degree(self):
        S2 = self.algebra.presentation.S2
        return tuple(self.m * s for s in S2)

    @property
    def is_zero(self):
        return self.b == 0

    def cochain(self):
        b = self.b
        return RuleCochain(
            self.algebra, 2, lambda keys: b * det2(keys[0], keys[1]), self.degree
        )

    def to_json(self):
        return {"schema": 1, "n": self.n, "b": str(self.b), "m": self.m}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["n"]), Fraction(str(data["b"])), int(data.get("m", 1)))
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"bad bivector description: {exc}") from None

    @classmethod
    def named(cls, n, name):
        if name == "pig":
            return cls(n, 1, 1)
        if name == "zero":
            return cls(n, 0, 1)
        if os.path.exists(name):
            with open(name) as fh:
                try:
                    data = json.load(fh)
                except json.JSONDecodeError as exc:
                    raise InputError(f"{name}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
            biv = cls.from_json(data)
            if biv.n != n:
                raise InputError(f"{name}: bivector is for n = {biv.n}, not {n}")
            return biv
        raise InputError(f"unknown bivector {name!r}; use pig, zero or a JSON file")


def verify_pi_g(n):
    """π_g on generators: f_0(S_1, S_3) = -(n+1), Jacobi and Leibniz on generator triples."""
    A = surface_algebra(n)
    p = A.presentation
    pi = MonomialBivector(n).cochain()
    gens = p.generators
    ok = det2(p.S1, p.S3) == -(n + 1)
    triples = list(product(gens, repeat=3))
    jac = hodge_project(gerstenhaber_bracket(pi, pi), 3)
    ok = ok and find_nonzero(jac, triples) is None
    ok = ok and find_nonzero(gerstenhaber_bracket(multiplication(A), pi), triples) is None
    return ok


# the d_1 map H^1_(1) -> H^2_(2) ------------------------------------------------------


def probe_bound(n):
    return 2 * n + 4


@lru_cache(maxsize=None)
def _support_probe(n, p):
    """Window points of weight <= p plus the generators.

    Λ is a cone, so a support condition that fails somewhere already fails
    near the facets, on small λ; the bound only has to reach the generators
    and their pairwise sums.
    """
    A = surface_algebra(n)
    pts = set(A.window(p))
    pts.update(A.presentation.generators)
    return tuple(sorted(pts))


@lru_cache(maxsize=None)
def derivation_space(n, D, p=None):
    """c in Q^2 with <c, λ> = 0 whenever λ - D is outside Λ (λ in the probe set)."""
    A = surface_algebra(n)
    p = probe_bound(n) if p is None else p
    rows = [list(lam) for lam in _support_probe(n, p) if not A.contains(_add(lam, D, -1))]
    return tuple(tuple(v) for v in nullspace(rows, 2))


@lru_cache(maxsize=None)
def bivector_space(n, D, p=None):
    """b with b det(λ, μ) x^(λ+μ-D) supported on Λ; dimension 0 or 1."""
    A = surface_algebra(n)
    p = probe_bound(n) if p is None else p
    probe = _support_probe(n, p)
    for i, lam in enumerate(probe):
        for mu in probe[i + 1:]:
            if det2(lam, mu) and not A.contains(_add(_add(lam, mu), D, -1)):
                return 0
    return 1


def _generator_values(n, c):
    p = surface_algebra(n).presentation
    return [c[0] * s[0] + c[1] * s[1] for s in p.generators]


def _generator_pairs(n):
    p = surface_algebra(n).presentation
    g = p.generators
    return [(g[0], g[1]), (g[0], g[2]), (g[1], g[2])]


@dataclass
class GradedMapMatrix:
    n: int
    source_degree: tuple
    target_degree: tuple
    source_basis: list  # values on S_1, S_2, S_3
    target_basis: list  # values on (S_1,S_2), (S_1,S_3), (S_2,S_3)
    matrix: list  # rows = target basis, cols = source basis

    @property
    def rank(self):
        if not self.matrix or not self.source_basis:
            return 0
        return rank(self.matrix, len(self.source_basis))

    @property
    def kernel(self):
        return len(self.source_basis) - self.rank

    @property
    def cokernel(self):
        return len(self.target_basis) - self.rank


def _bracket_coefficient(n, mu_p, c, D, checks=6):
    """Coefficient b of -[μ_p, θ_c] = b det(λ,μ) x^(λ+μ-D-deg μ_p).

    Read off the first pair where the output survives and confirmed on the
    next few such pairs.
    """
    A = surface_algebra(n)
    theta = linear_form_cochain(A, c, D)
    image = gerstenhaber_bracket(mu_p.cochain(), theta) * -1
    target_degree = _add(D, mu_p.degree)
    probe = _support_probe(n, probe_bound(n))
    coeff = None
    seen = 0
    for i, lam in enumerate(probe):
        if seen >= checks:
            break
        for mu in probe[i + 1:]:
            dt = det2(lam, mu)
            if not dt:
                continue
            out = _add(_add(lam, mu), target_degree, -1)
            if not A.contains(out):
                continue
            v = image.on_basis((lam, mu)).get(out, Fraction(0)) / dt
            seen += 1
            if coeff is None:
                coeff = v
            elif v != coeff:
                raise InvariantViolation(
                    f"-[μ_p, θ] is not a multiple of det at {(lam, mu)}: {v} vs {coeff}"
                )
    return coeff if coeff is not None else Fraction(0)


def build_d1_matrix(n, mu_p, D):
    """Matrix of d_1 = -[μ_p, .] from derivations of degree D to skew biderivations."""
    if not isinstance(mu_p, MonomialBivector):
        raise UnsupportedRepresentation("d_1 is implemented for monomial bivectors only")
    return _build_d1(n, mu_p, tuple(D))


@lru_cache(maxsize=None)
def _build_d1(n, mu_p, D):
    target = _add(D, mu_p.degree)
    source = derivation_space(n, D)
    tdim = bivector_space(n, target)
    pairs = _generator_pairs(n)
    target_basis = [[Fraction(det2(a, b)) for a, b in pairs]] if tdim else []
    source_basis = [_generator_values(n, c) for c in source]
    matrix = []
    if tdim:
        matrix = [[Fraction(0)] * len(source)]
        if not mu_p.is_zero:
            matrix = [[_bracket_coefficient(n, mu_p, c, D) for c in source]]
    return GradedMapMatrix(n, D, target, source_basis, target_basis, matrix)


def d1_closed_form(n, mu_p, c, D):
    """-[μ_p, θ_c] coefficient: -b <c, mS_2 - D> (independent check of the matrix)."""
    S2 = surface_algebra(n).presentation.S2
    v = _add(tuple(mu_p.m * s for s in S2), D, -1)
    return -mu_p.b * (c[0] * v[0] + c[1] * v[1])


# rank of H^2_(1) -> H^3_(2) --------------------------------------------------------


def spot_check_zero_map(n, mu_p, d=None):
    """Check that [μ_p, q] is a Hochschild coboundary for each T¹_(1) representative q.

    The representative in degree kS_2 is the t-linear product coefficient of
    g + t z^(n+1-k); the t-linear bracket coefficient h of the same family
    satisfies e_3(2)[π_g, q] = -[μ, h], which exhibits the class as zero.
    Returns the list of checked degrees; raises InvariantViolation on failure.
    """
    from .dgla import bounded_tuples
    from .hypersurface import HypersurfaceFamily

    d = default_window() if d is None else d
    if mu_p.is_zero:
        return []
    if mu_p.m != 1:
        raise UnsupportedRepresentation("the zero-map spot-check needs a multiple of π_g")
    checked = []
    for m in range(n):
        F = HypersurfaceFamily(n, m, order=2)
        A = F.algebra
        q = F.product_cochain(1)
        h = F.bracket_cochain(1)
        tuples = bounded_tuples(A, min(d, 2 * (n + 2)), 3)
        lhs = hodge_project(gerstenhaber_bracket(mu_p.cochain(), q), 2)
        rhs = gerstenhaber_bracket(multiplication(A), h) * (-mu_p.b)
        hit = find_nonzero(lhs - rhs, tuples)
        if hit is not None:
            raise InvariantViolation(
                f"[μ_p, q] is not exact in degree {F.coefficient_degree(1)}: "
                f"residual {hit[1]} at {hit[0]}"
            )
        checked.append(F.coefficient_degree(1))
    return checked


@dataclass
class PoissonCohomology:
    n: int
    bivector: MonomialBivector
    window: int
    h0: dict  # source degree -> kernel dim
    cokernels: dict  # target degree -> coker dim (nonzero only)
    h2_1: int
    zero_map_degrees: list
    h1: int
    h2: int
    module: bool  # True when H^1 is an infinite module (only its window part is summed)

    def to_json(self):
        return {
            "schema": 1,
            "n": self.n,
            "mu_p": self.bivector.to_json(),
            "window": self.window,
            "H0": [{"degree": list(D), "dim": v} for D, v in sorted(self.h0.items()) if v],
            "cokernels": [{"degree": list(D), "dim": v} for D, v in sorted(self.cokernels.items())],
            "H2_(1)": self.h2_1,
            "zero_map_checked": [list(D) for D in self.zero_map_degrees],
            "H1": self.h1,
            "H2": self.h2,
            "H1_is_module": self.module,
        }


def _cohomology_pieces(n, mu_p, d):
    degrees = degree_window(n, d)
    h0, cokernels = {}, {}
    for D in degrees:
        M = build_d1_matrix(n, mu_p, D)
        if M.source_basis:
            h0[D] = M.kernel
    for T in degrees:
        D = _add(T, mu_p.degree, -1)
        M = build_d1_matrix(n, mu_p, D)
        if M.cokernel:
            cokernels[T] = M.cokernel
    return h0, cokernels


def poisson_cohomology(n, mu_p=None, window=None, stability=True):
    """H^0 per degree, H^1 and H^2 of (A_n, μ_p) over a degree window.

    H^1 = Σ coker(H^1_(1) -> H^2_(2)) + dim ker(H^2_(1) -> H^3_(2)) and
    H^2 = dim coker(H^2_(1) -> H^3_(2)); the second map is taken to be zero,
    backed by spot_check_zero_map.  With stability, the cokernel data are
    recomputed at twice the window and must agree.
    """
    d = default_window() if window is None else window
    if mu_p is None:
        mu_p = MonomialBivector(n)
    if not isinstance(mu_p, MonomialBivector):
        raise UnsupportedRepresentation("Poisson cohomology needs a monomial bivector")
    if not mu_p.is_zero and mu_p.m != 1:
        raise UnsupportedRepresentation(
            "only multiples of π_g and the zero bivector are supported"
        )
    h0, cokernels = _cohomology_pieces(n, mu_p, d)
    if stability and not mu_p.is_zero:
        _, wide = _cohomology_pieces(n, mu_p, 2 * d)
        if wide != cokernels:
            raise InvariantViolation(
                f"cokernels change between windows {d} and {2 * d}: {cokernels} vs {wide}"
            )
    checked = spot_check_zero_map(n, mu_p, d)
    h2_1 = sum(a for a, _ in surface_t1_dims(n, 2 * (n + 2)).values())
    h3_2 = sum(b for _, b in surface_t1_dims(n, 2 * (n + 2)).values())
    rank_zero_map = 0
    h1 = sum(cokernels.values()) + h2_1 - rank_zero_map
    h2 = h3_2 - rank_zero_map
    return PoissonCohomology(
        n, mu_p, d, h0, cokernels, h2_1, checked, h1, h2, module=mu_p.is_zero
    )


class DerivationCochain(Cochain):
    """x^λ -> <c, λ> x^(λ - D) as a 1-cochain; used by the tests as an oracle."""

    def __init__(self, algebra, c, degree):
        super().__init__(1)
        self.algebra, self.c, self.degree = algebra, tuple(c), tuple(degree)

    def _compute(self, keys):
        (lam,) = keys
        out = _add(lam, self.degree, -1)
        v = Fraction(self.c[0] * lam[0] + self.c[1] * lam[1])
        if not v or not self.algebra.contains(out):
            return {}
        return {out: v}
