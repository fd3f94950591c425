"""Closed-form classification of the degrees with nonzero T¹_(i), i = 1, 2, 3.

Case labels:
  a  R = R*                      dims (N-3, N-3, 0)
  b  R = qR*, q >= 2             dims from v = #{j : q <= l(j)}
  c  R = qR* - p s_j, p >= p_min dims (1, 2, 1), infinite family in p
  d  R = qR*, two parallel edges strictly longer than all others
  e  R = qR* + p s_j for a parallel pair (j, k)

Dimensions are reported for i = 1, 2, 3; i >= 4 always vanishes.
"""

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import InputError
from .lattice import det3, in_interior, pairing
from .linalg import solve
from .t1 import t1_dim

HODGE = (1, 2, 3)
FAMILY_DIMS = (1, 2, 1)

NOTE_EXAMPLE_INCOMPLETE = (
    "The worked P(1,2,3) example lists only the three (c)-families and says all "
    "other degrees vanish, but the case (b) formulas with v = 2 give dims "
    "(0, 1, 1) at R = 2R*; the independent evaluator agrees with (b)."
)
NOTE_EXAMPLE_GAMMA = (
    "The worked P(1,2,3) example writes the family 2R* - gamma s_1, gamma >= 2; "
    "it is consistent with case (c) only when read as 3R* - gamma s_1 "
    "(p_min = 2). Under the literal reading 2R* - gamma s_1 (gamma >= 2) is a "
    "subfamily of 2R* - beta s_1 (beta >= 1)."
)


@dataclass(frozen=True)
class DegreeFamily:
    """R = q R* - p s_j for all p >= p_min (kind c)."""

    kind: str
    j: int
    q: int
    p_min: int
    dims: tuple = FAMILY_DIMS

    def degree(self, cone, p):
        return cone.degree(self.q, self.j, p)

    def contains(self, cone, R):
        p = family_parameter(cone, self.j, self.q, R)
        return p is not None and p >= self.p_min

    def to_json(self):
        return {
            "kind": self.kind,
            "edge": self.j + 1,
            "q": self.q,
            "p_min": self.p_min,
            "dims": dict(zip(map(str, HODGE), self.dims)),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["kind"],
            int(data["edge"]) - 1,
            int(data["q"]),
            int(data["p_min"]),
            tuple(int(data["dims"][str(i)]) for i in HODGE),
        )


@dataclass
class DimensionReport:
    sporadic: dict = field(default_factory=dict)  # degree -> (dims, labels)
    families: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, R, dims, label):
        R = tuple(R)
        if not any(dims):
            return
        if R in self.sporadic:
            old, labels = self.sporadic[R]
            if old != dims:
                raise InputError(f"conflicting dims at {R}: {old} vs {dims}")
            if label not in labels:
                labels.append(label)
        else:
            self.sporadic[R] = (tuple(dims), [label])

    def dims_at(self, cone, R):
        R = tuple(R)
        if R in self.sporadic:
            return self.sporadic[R][0]
        for fam in self.families:
            if fam.contains(cone, R):
                return fam.dims
        return (0, 0, 0)

    def labels_at(self, cone, R):
        R = tuple(R)
        if R in self.sporadic:
            return "".join(sorted(self.sporadic[R][1]))
        return "".join(sorted({f.kind for f in self.families if f.contains(cone, R)}))

    def to_json(self):
        return {
            "schema": 1,
            "sporadic": [
                {
                    "degree": list(R),
                    "dims": dict(zip(map(str, HODGE), dims)),
                    "cases": sorted(labels),
                }
                for R, (dims, labels) in sorted(self.sporadic.items())
            ],
            "families": [f.to_json() for f in self.families],
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data):
        rep = cls()
        for entry in data["sporadic"]:
            dims = tuple(int(entry["dims"][str(i)]) for i in HODGE)
            rep.sporadic[tuple(entry["degree"])] = (dims, list(entry["cases"]))
        rep.families = [DegreeFamily.from_json(f) for f in data["families"]]
        rep.notes = list(data["notes"])
        return rep

    def __eq__(self, other):
        if not isinstance(other, DimensionReport):
            return NotImplemented
        return self.to_json() == other.to_json()


def _ceil_div(a, b):
    return -(-a // b)


def p_min(cone, j, q):
    """Smallest p with q R* - p s_j outside the interior of the dual cone."""
    vals = [
        _ceil_div(q, pairing(cone.ray(l), cone.dual_rays[j]))
        for l in range(cone.N)
        if l not in (j, (j + 1) % cone.N)
    ]
    return min(vals)


def family_parameter(cone, j, q, R):
    """p with R = q R* - p s_j, or None."""
    diff = [q * r - x for r, x in zip(cone.canonical_degree, R)]
    s = cone.dual_rays[j]
    p = None
    for d, c in zip(diff, s):
        if c == 0:
            if d != 0:
                return None
        elif d % c:
            return None
        else:
            val = d // c
            if p is not None and p != val:
                return None
            p = val
    return p


def _v(cone, q):
    return sum(1 for l in cone.edge_lengths if q <= l)


def b_dims(v):
    return (max(0, v - 2), max(0, 2 * v - 3), max(0, v - 1))


def d_pairs(cone):
    """Unordered parallel pairs both strictly longer than every other edge."""
    out = []
    lengths = cone.edge_lengths
    for j, k in cone.parallel_pairs():
        if j >= k:
            continue
        others = [lengths[l] for l in range(cone.N) if l not in (j, k)]
        top = max(others) if others else 0
        if min(lengths[j], lengths[k]) > top:
            out.append((j, k, top))
    return out


def classify(cone):
    rep = DimensionReport()
    N = cone.N
    if N > 3:
        rep.add(cone.degree(1), (N - 3, N - 3, 0), "a")
    lengths = cone.edge_lengths
    dpairs = d_pairs(cone)
    for q in range(2, max(lengths) + 1):
        v = _v(cone, q)
        in_d = [pair for pair in dpairs if pair[2] < q <= min(lengths[pair[0]], lengths[pair[1]])]
        if in_d:
            rep.add(cone.degree(q), FAMILY_DIMS, "d")
        else:
            rep.add(cone.degree(q), b_dims(v), "b")
    for j in range(N):
        for q in range(2, lengths[j] + 1):
            rep.families.append(DegreeFamily("c", j, q, p_min(cone, j, q)))
    for j, k in cone.parallel_pairs():
        d = pairing(cone.ray(k), cone.dual_rays[j])
        for q in range(1, lengths[j] + 1):
            for p in range(1, (lengths[k] - q) // d + 1):
                R = tuple(q * r + p * s for r, s in zip(cone.canonical_degree, cone.dual_rays[j]))
                rep.add(R, FAMILY_DIMS, "e")
    if _is_p123(cone):
        rep.notes = [NOTE_EXAMPLE_INCOMPLETE, NOTE_EXAMPLE_GAMMA]
    return rep


def _is_p123(cone):
    """Cones lattice-equivalent to the cone over P(1,2,3)'s polygon (edge lengths 3,1,2 cyclically)."""
    if cone.N != 3:
        return False
    ell = cone.edge_lengths
    return any(ell[r:] + ell[:r] == (3, 1, 2) for r in range(3))


def classified_dims(cone, R, report=None):
    report = classify(cone) if report is None else report
    return report.dims_at(cone, R)


# cross-check against the evaluator -------------------------------------------


def scan_degrees(cone, q_max, p_max):
    """All q R* + p s_j with -1 <= q <= q_max, |p| <= p_max, plus every lattice
    degree whose pairings are bounded by q_max in absolute value."""
    out = set()
    for q in range(-1, q_max + 1):
        for j in range(cone.N):
            for p in range(-p_max, p_max + 1):
                out.add(cone.degree(q, j, p))
    out.update(bounded_degrees(cone, q_max))
    return sorted(out)


def bounded_degrees(cone, bound):
    """Lattice R with |<a_j,R>| <= bound for all j."""
    basis = next(
        [cone.rays[a], cone.rays[b], cone.rays[c]]
        for a, b, c in combinations(range(cone.N), 3)
        if det3(cone.rays[a], cone.rays[b], cone.rays[c]) != 0
    )
    # R = B^-1 w with w the three pairings, so |R_k| <= bound * sum_e |B^-1[k][e]|
    cols = [solve(basis, e, 3) for e in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]
    lo = [0] * 3
    hi = [0] * 3
    for k in range(3):
        span = sum(abs(cols[e][k]) for e in range(3)) * bound
        lo[k], hi[k] = -int(span) - 1, int(span) + 1
    out = []
    for R in product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if all(abs(w) <= bound for w in cone.weights(R)):
            out.append(tuple(R))
    return out


@dataclass(frozen=True)
class Mismatch:
    degree: tuple
    classified: tuple
    evaluated: tuple


def crosscheck(cone, q_max, p_max, hodge=HODGE):
    rep = classify(cone)
    bad = []
    for R in scan_degrees(cone, q_max, p_max):
        expect = rep.dims_at(cone, R)
        got = tuple(t1_dim(cone, R, i) for i in hodge)
        if expect != got:
            bad.append(Mismatch(R, expect, got))
    return bad


def higher_vanishing(cone, q_max, p_max, hodge=(4, 5)):
    """Degrees in the scan with some nonzero T¹_(i), i in hodge."""
    return [
        R
        for R in scan_degrees(cone, q_max, p_max)
        if any(t1_dim(cone, R, i) for i in hodge)
    ]


# HH assembly ------------------------------------------------------------------

PLACEHOLDER_T0_2 = "T0_(2): external description, not computed"
PLACEHOLDER_T0_3 = "T0_(3): external description, not computed"
PLACEHOLDER_T2_1 = "T2_(1): external description, not computed"


def _rows(report, index):
    pos = HODGE.index(index)
    sporadic = [
        {"degree": list(R), "dim": dims[pos], "cases": sorted(labels)}
        for R, (dims, labels) in sorted(report.sporadic.items())
        if dims[pos]
    ]
    families = [
        {"edge": f.j + 1, "q": f.q, "p_min": f.p_min, "dim": f.dims[pos]}
        for f in report.families
        if f.dims[pos]
    ]
    return {"sporadic": sporadic, "families": families}


def hh_assembly(cone, report=None):
    report = classify(cone) if report is None else report
    return {
        "schema": 1,
        "HH2": {
            "T1_(1)": _rows(report, 1),
            "placeholders": [PLACEHOLDER_T0_2],
        },
        "HH3": {
            "T1_(2)": _rows(report, 2),
            "placeholders": [PLACEHOLDER_T2_1, PLACEHOLDER_T0_3],
        },
    }


def interior_check(cone, fam):
    """p_min is exactly the first p leaving the interior."""
    inside_before = in_interior(fam.degree(cone, fam.p_min - 1), cone)
    outside_at = not in_interior(fam.degree(cone, fam.p_min), cone)
    return inside_before and outside_at
