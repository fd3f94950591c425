"""Exact rational linear algebra on small dense matrices.

Thin wrappers over sympy's ``DomainMatrix`` on ``QQ``; inputs and outputs
are plain lists of ``Fraction`` / ``int``.
"""

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _dm(rows, ncols=None):
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    data = [[QQ.convert(Fraction(x)) for x in r] for r in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ)


def _frac(x):
    return Fraction(int(x.numerator), int(x.denominator))


def rank(rows, ncols=None):
    """Rank of a matrix given as a list of rows."""
    rows = list(rows)
    if not rows:
        return 0
    m = _dm(rows, ncols)
    if m.shape[1] == 0:
        return 0
    return m.rank()


def nullspace(rows, ncols):
    """Basis (list of row vectors) of {x : A x = 0}."""
    rows = list(rows)
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ns = _dm(rows, ncols).nullspace()
    return [[_frac(x) for x in row] for row in ns.to_Matrix().tolist()] if ns.shape[0] else []


def solve(rows, rhs, ncols):
    """One rational solution of A x = b, or None when inconsistent."""
    rows = [list(r) for r in rows]
    if not rows:
        return [Fraction(0)] * ncols
    aug = [r + [b] for r, b in zip(rows, rhs)]
    m = _dm(aug, ncols + 1)
    rref, pivots = m.rref()
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    dense = rref.to_Matrix().tolist()
    for row_index, col in enumerate(pivots):
        sol[col] = _frac(QQ.convert(dense[row_index][ncols]))
    return sol


def span_dim(vectors):
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return rank(vectors)


def intersection_dim(constraint_blocks, ambient):
    """Dimension of the common solution space of several homogeneous systems."""
    stacked = [row for block in constraint_blocks for row in block]
    return ambient - rank(stacked, ambient)


def orthogonal_complement(vectors, ambient):
    """Rows c with <c, v> = 0 for every v; describes span(vectors) as a kernel."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return [[Fraction(int(i == j)) for j in range(ambient)] for i in range(ambient)]
    return nullspace(vectors, ambient)
