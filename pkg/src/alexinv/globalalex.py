"""Global Alexander polynomials: superabundance on P^2, contributing faces,
local products and the divisibility test."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import gcd
from typing import Sequence

from . import upoly
from .intlinalg import rational_rank
from .laurent import AlexanderPolynomial
from .localsing.catalog import lookup
from .localsing.spectrum import local_monodromy_charpoly

__all__ = [
    "PointConditionSet",
    "LocalTypeList",
    "superabundance_p2",
    "monomials",
    "alexander_from_contributing_faces",
    "ContributingFacesResult",
    "LocalProduct",
    "local_product",
    "DivisibilityVerdict",
    "check_divisibility",
    "CharpolyConstraint",
    "milnor_charpoly_constraint",
]


def _same_projective_point(p, q) -> bool:
    return all(p[i] * q[j] == p[j] * q[i] for i in range(3) for j in range(3))


@dataclass(frozen=True)
class PointConditionSet:
    """Degree-k forms on P^2 vanishing at the given points."""

    degree: int
    points: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        for p in pts:
            if len(p) != 3 or not any(p):
                raise ValueError(f"{p} is not a projective point")
        for i in range(len(pts)):
            for j in range(i):
                if _same_projective_point(pts[i], pts[j]):
                    raise ValueError(f"points {j} and {i} coincide")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_json(cls, data: dict) -> "PointConditionSet":
        from .serialize import parse_frac
        return cls(int(data["degree"]),
                   tuple(tuple(parse_frac(x) for x in p) for p in data["points"]))

    def evaluation_matrix(self) -> list[list[Fraction]]:
        """One row per point condition, one column per degree-k monomial."""
        mons = monomials(self.degree)
        return [[p[0] ** a * p[1] ** b * p[2] ** c for a, b, c in mons] for p in self.points]


def monomials(k: int) -> list[tuple[int, int, int]]:
    return [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]


def superabundance_p2(pc: PointConditionSet, extra_rows: Sequence[Sequence] = ()) -> int:
    """dim H^1(P^2, I(k)) = #conditions - rank of the evaluation matrix.

    ``extra_rows`` takes additional linear functionals on degree-k forms,
    e.g. derivative conditions, as rows in the monomial basis.
    """
    rows = pc.evaluation_matrix() + [[Fraction(x) for x in r] for r in extra_rows]
    if not rows:
        return 0
    return len(rows) - rational_rank(rows)


@dataclass(frozen=True)
class LocalTypeList:
    entries: tuple

    def __post_init__(self):
        ents = tuple((str(n), int(k)) for n, k in self.entries)
        for n, k in ents:
            if k < 0:
                raise ValueError("counts must be nonnegative")
            lookup(n)
        object.__setattr__(self, "entries", ents)

    @classmethod
    def parse(cls, text: str) -> "LocalTypeList":
        """"cusp:6,node:2"; a bare name counts once."""
        out = []
        for part in filter(None, (s.strip() for s in text.split(","))):
            name, _, k = part.rpartition(":") if ":" in part else (part, "", "1")
            out.append((name, int(k)))
        return cls(tuple(out))

    def __add__(self, other: "LocalTypeList") -> "LocalTypeList":
        return LocalTypeList(self.entries + other.entries)


@dataclass(frozen=True)
class ContributingFacesResult:
    polynomial: AlexanderPolynomial
    components: tuple           # (face, superabundance, claimed dimension)
    notes: tuple = ()


def alexander_from_contributing_faces(degree: int, faces: Sequence) -> ContributingFacesResult:
    """Product of Phi_n^s over faces gamma with superabundance s, n = denominator of gamma.

    Roots exp(2 pi i gamma) and exp(-2 pi i gamma) come together, so two
    faces in the same Galois orbit must carry the same superabundance.
    """
    by_order: dict[int, int] = {}
    comps = []
    for gamma, s in faces:
        gamma = Fraction(gamma)
        s = int(s)
        if s < 0:
            raise ValueError("superabundance must be nonnegative")
        if not 0 < gamma < 1:
            raise ValueError(f"face {gamma} outside (0, 1)")
        if (degree * gamma).denominator != 1:
            raise ValueError(f"non-integral character: {degree}*{gamma} not an integer")
        n = gamma.denominator
        if n in by_order and by_order[n] != s:
            raise ValueError(f"faces of order {n} carry different superabundances")
        by_order[n] = s
        if s > 0:
            comps.append((gamma, s, s + 1))
    poly = AlexanderPolynomial.from_cyclotomic({n: s for n, s in by_order.items() if s})
    notes = ("dimension s + 1 refers to positive-dimensional components; "
             "for the cyclic quotient each root pair appears with multiplicity s",)
    return ContributingFacesResult(poly, tuple(comps), notes)


@dataclass(frozen=True)
class LocalProduct:
    """prod of local polynomials with the (t-1) exponent kept apart."""

    reduced: AlexanderPolynomial
    t_minus_1: int

    def full(self) -> AlexanderPolynomial:
        return self.reduced * AlexanderPolynomial.from_coeffs([-1, 1]) ** self.t_minus_1


def local_product(lt: LocalTypeList) -> LocalProduct:
    poly, k = AlexanderPolynomial.one(), 0
    for name, count in lt.entries:
        entry = lookup(name)
        if entry.weights is None:
            continue   # smooth points contribute a trivial factor
        red, e = local_monodromy_charpoly(entry.weights).strip_t_minus_1()
        poly = poly * red ** count
        k += e * count
    return LocalProduct(poly, k)


@dataclass
class DivisibilityVerdict:
    divides: bool
    reasons: list = field(default_factory=list)
    certificates: dict = field(default_factory=dict)

    def __bool__(self):
        return self.divides


def check_divisibility(candidate: AlexanderPolynomial, locals_: LocalTypeList,
                       at_infinity: AlexanderPolynomial | None = None,
                       h1_is_z: bool = False) -> DivisibilityVerdict:
    """Does the candidate divide the local product times an arbitrary power of t - 1?"""
    v = DivisibilityVerdict(True)
    if candidate.is_zero():
        return DivisibilityVerdict(False, ["candidate is zero"])
    stripped, _ = candidate.strip_t_minus_1()
    lp = local_product(locals_)
    if stripped.divides(lp.reduced):
        v.certificates["local"] = stripped.quotient(lp.reduced)
    else:
        v.divides = False
        v.reasons.append("candidate does not divide the product of local polynomials")
    if at_infinity is not None:
        if candidate.divides(at_infinity):
            v.certificates["infinity"] = candidate.quotient(at_infinity)
        else:
            v.divides = False
            v.reasons.append("candidate does not divide the polynomial at infinity")
    if h1_is_z and candidate(1) == 0:
        v.divides = False
        v.reasons.append("candidate vanishes at t = 1 although H1 = Z")
    return v


@dataclass(frozen=True)
class CharpolyConstraint:
    """Family (t-1)^base * prod_n Phi_n^{k_n}, 0 <= k_n <= bounds[n]."""

    num_lines: int
    base_exponent: int
    bounds: dict
    notes: tuple = ()

    def members(self):
        orders = sorted(self.bounds)
        for ks in iproduct(*(range(self.bounds[n] + 1) for n in orders)):
            fac = {1: self.base_exponent} if self.base_exponent else {}
            fac.update({n: k for n, k in zip(orders, ks) if k})
            yield AlexanderPolynomial.from_cyclotomic(fac)

    def contains(self, poly: AlexanderPolynomial) -> bool:
        factors, rest = poly.cyclotomic_factors()
        if rest != [1]:
            return False
        if factors.get(1, 0) != self.base_exponent:
            return False
        return all(n in self.bounds and k <= self.bounds[n]
                   for n, k in factors.items() if n != 1)

    def family_text(self) -> str:
        parts = [f"(t-1)^{self.base_exponent}"]
        parts += [f"Phi_{n}^k{n}, 0<=k{n}<={b}" for n, b in sorted(self.bounds.items())]
        return " * ".join(parts)


def milnor_charpoly_constraint(num_lines: int, multiplicities: Sequence[int]) -> CharpolyConstraint:
    """Divisibility constraint for the Milnor monodromy of a line arrangement.

    The line's multiple points of multiplicity m have local factors
    (t^m - 1)^(m-2) (t - 1); eigenvalues of the monodromy are N-th roots
    of unity.
    """
    N = int(num_lines)
    if N < 1:
        raise ValueError("need at least one line")
    mults = [int(m) for m in multiplicities]
    if any(m < 2 for m in mults):
        raise ValueError("multiplicities must be >= 2")
    bounds: Counter = Counter()
    for m in mults:
        for n in range(2, m + 1):
            if m % n == 0 and N % n == 0 and m > 2:
                bounds[n] += m - 2
    notes = []
    if mults and sum(m - 1 for m in mults) != N - 1:
        notes.append("multiplicities along the line do not account for all other lines")
    return CharpolyConstraint(N, N - 1, dict(bounds), tuple(notes))
