"""Exact multivariable Laurent polynomials over Q, Fitting ideals and orders."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping

from . import upoly

__all__ = [
    "LaurentPoly",
    "AlexanderPolynomial",
    "minor_ideal",
    "univariate_smith",
    "univariate_order",
    "determinant",
]


class LaurentPoly:
    """Sparse Laurent polynomial: exponent tuple -> nonzero Fraction.

    Instances are treated as immutable.
    """

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping | Iterable = ()):
        self.num_vars = int(num_vars)
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.num_vars:
                raise ValueError(f"exponent {exps} has wrong length for {num_vars} variables")
            c = Fraction(c)
            if c:
                d[exps] = d.get(exps, 0) + c
                if not d[exps]:
                    del d[exps]
        self._terms = d
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, num_vars: int, c=1) -> "LaurentPoly":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def monomial(cls, exps, c=1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, num_vars: int, i: int) -> "LaurentPoly":
        e = [0] * num_vars
        e[i] = 1
        return cls(num_vars, {tuple(e): 1})

    @classmethod
    def from_coeffs(cls, coeffs, shift: int = 0) -> "LaurentPoly":
        """Univariate from a low-to-high coefficient list."""
        return cls(1, {(shift + k,): c for k, c in enumerate(coeffs) if c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.num_vars != self.num_vars:
                raise ValueError("variable counts differ")
            return other
        return LaurentPoly.constant(self.num_vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self._terms)
        for e, c in other._terms.items():
            d[e] = d.get(e, 0) + c
        return LaurentPoly(self.num_vars, d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        d: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly(self.num_vars, d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            return LaurentPoly(self.num_vars, {tuple(-x * -n for x in e): Fraction(1) / c ** -n})
        out = LaurentPoly.constant(self.num_vars, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.num_vars == other.num_vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(self.num_vars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def min_exponents(self) -> tuple:
        if not self._terms:
            return (0,) * self.num_vars
        return tuple(min(e[i] for e in self._terms) for i in range(self.num_vars))

    def shift(self, exps) -> "LaurentPoly":
        return LaurentPoly(self.num_vars,
                           {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()})

    def leading_term(self):
        e = max(self._terms)
        return e, self._terms[e]

    def unit_normal(self) -> "LaurentPoly":
        """Representative modulo units +-q*t^k: min exponents 0, integer
        content 1, lexicographically leading coefficient positive."""
        if not self._terms:
            return self
        m = self.min_exponents()
        den = 1
        for c in self._terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        g = 0
        for c in self._terms.values():
            g = gcd(g, int(c * den))
        scale = Fraction(den, g)
        if self.leading_term()[1] < 0:
            scale = -scale
        return LaurentPoly(self.num_vars,
                           {tuple(a - b for a, b in zip(e, m)): c * scale
                            for e, c in self._terms.items()})

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def evaluate(self, point):
        """Evaluate at a tuple of nonzero values (any field supporting ** with ints)."""
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                v = v * (x ** k)
            total = total + v
        return total

    def substitute_monomials(self, images) -> "LaurentPoly":
        """Apply t_i -> monomial with exponent vector images[i] (in a new ring)."""
        k = len(images[0]) if images else 0
        d: dict = {}
        for e, c in self._terms.items():
            ne = [0] * k
            for ei, img in zip(e, images):
                for j in range(k):
                    ne[j] += ei * img[j]
            ne = tuple(ne)
            d[ne] = d.get(ne, 0) + c
        return LaurentPoly(k, d)

    # univariate bridge
    def to_upoly(self):
        """(coefficient list, lowest exponent) for a univariate polynomial."""
        if self.num_vars != 1:
            raise ValueError("not univariate")
        if not self._terms:
            return [], 0
        lo = min(e[0] for e in self._terms)
        hi = max(e[0] for e in self._terms)
        coeffs = [Fraction(0)] * (hi - lo + 1)
        for e, c in self._terms.items():
            coeffs[e[0] - lo] = c
        return coeffs, lo

    def __repr__(self):
        return f"LaurentPoly({self.text()})"

    def text(self, names=None) -> str:
        from .serialize import poly_to_text
        return poly_to_text(self, names)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Univariate Laurent polynomial in unit-normal form."""

    poly: LaurentPoly

    def __post_init__(self):
        if self.poly.num_vars != 1:
            raise ValueError("Alexander polynomials are univariate")
        object.__setattr__(self, "poly", self.poly.unit_normal())

    @classmethod
    def from_coeffs(cls, coeffs) -> "AlexanderPolynomial":
        return cls(LaurentPoly.from_coeffs(coeffs))

    @classmethod
    def one(cls) -> "AlexanderPolynomial":
        return cls.from_coeffs([1])

    @classmethod
    def from_cyclotomic(cls, factors: Mapping[int, int]) -> "AlexanderPolynomial":
        p = [1]
        for n, k in sorted(factors.items()):
            p = upoly.mul(p, upoly.power(list(upoly.cyclotomic(n)), k))
        return cls.from_coeffs(p)

    def coeffs(self) -> list:
        c, _ = self.poly.to_upoly()
        return [int(x) for x in c]

    @property
    def degree(self) -> int:
        return len(self.coeffs()) - 1

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __mul__(self, other: "AlexanderPolynomial") -> "AlexanderPolynomial":
        return AlexanderPolynomial(self.poly * other.poly)

    def __pow__(self, n: int) -> "AlexanderPolynomial":
        return AlexanderPolynomial(self.poly ** n)

    def __call__(self, x):
        return upoly.evaluate(self.coeffs(), x)

    def divides(self, other: "AlexanderPolynomial") -> bool:
        return upoly.divides(self.coeffs(), other.coeffs())

    def quotient(self, other: "AlexanderPolynomial") -> "AlexanderPolynomial":
        """other / self, exact."""
        return AlexanderPolynomial.from_coeffs(upoly.exact_div(other.coeffs(), self.coeffs()))

    def strip_t_minus_1(self) -> tuple["AlexanderPolynomial", int]:
        c, k = self.coeffs(), 0
        if not c:
            return self, 0
        while len(c) > 1:
            quo, rem = upoly.divmod_(c, [-1, 1])
            if rem:
                break
            c, k = quo, k + 1
        return AlexanderPolynomial.from_coeffs(c), k

    def cyclotomic_factors(self):
        return upoly.cyclotomic_factorization(self.coeffs())

    def is_cyclotomic_product(self) -> bool:
        return self.cyclotomic_factors()[1] == [1]

    def text(self) -> str:
        return self.poly.text(["t"])

    def __repr__(self):
        return f"AlexanderPolynomial({self.text()})"


def _check_matrix(m):
    if not m:
        return 0
    width = len(m[0])
    for row in m:
        if len(row) != width:
            raise ValueError("ragged matrix")
    return width


def determinant(m):
    """Exact determinant by cofactor-free fraction elimination over Laurent polys.

    Uses Bareiss-free Laplace expansion for small sizes; sizes here are tiny.
    """
    n = len(m)
    if n == 0:
        return None
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return m[0][0] * 0
    return total


def minor_ideal(m, corank: int, num_cols: int | None = None) -> list[LaurentPoly]:
    """Generators of the ideal of (n - corank)-minors of an n-column matrix.

    The result is deduplicated up to units.  ``[]`` encodes the zero ideal;
    a list containing the constant 1 encodes the unit ideal.
    """
    width = _check_matrix(m)
    n = num_cols if num_cols is not None else width
    if m and width != n:
        raise ValueError("num_cols disagrees with matrix width")
    size = n - corank
    nv = _num_vars(m)
    if size <= 0:
        return [LaurentPoly.constant(nv, 1)]
    if size > min(len(m), n):
        return []
    seen: dict = {}
    for rows in combinations(range(len(m)), size):
        for cols in combinations(range(n), size):
            d = determinant([[m[r][c] for c in cols] for r in rows])
            if d.is_zero():
                continue
            u = d.unit_normal()
            if u.is_constant():
                return [LaurentPoly.constant(nv, 1)]
            seen.setdefault(u, None)
    return sorted(seen, key=lambda p: p.sorted_terms())


def _num_vars(m) -> int:
    for row in m:
        for x in row:
            return x.num_vars
    return 1


def univariate_smith(m) -> list[LaurentPoly]:
    """Invariant factors over Q[t, t^-1] of a univariate Laurent matrix.

    Returns min(rows, cols) diagonal entries in unit-normal form, with
    zeros for the rank deficiency, each dividing the next.
    """
    ncols = _check_matrix(m)
    rows = []
    for row in m:
        polys = []
        lo = min((p.to_upoly()[1] for p in row if not p.is_zero()), default=0)
        for p in row:
            c, s = p.to_upoly()
            polys.append([Fraction(0)] * (s - lo) + c if c else [])
        rows.append(polys)
    a = rows
    nr = len(a)
    t = 0
    limit = min(nr, ncols)
    while t < limit:
        cand = [(len(a[i][j]), i, j) for i in range(t, nr) for j in range(t, ncols) if a[i][j]]
        if not cand:
            break
        _, pi, pj = min(cand)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            clean = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    q, _ = upoly.divmod_(a[i][t], a[t][t])
                    a[i] = [upoly.sub(x, upoly.mul(q, y)) for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        clean = False
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q, _ = upoly.divmod_(a[t][j], a[t][t])
                    for row in a:
                        row[j] = upoly.sub(row[j], upoly.mul(q, row[t]))
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        clean = False
            if not clean:
                continue
            bad = next((i for i in range(t + 1, nr) for j in range(t + 1, ncols)
                        if a[i][j] and not upoly.divides(a[t][t], a[i][j])), None)
            if bad is None:
                break
            a[t] = [upoly.add(x, y) for x, y in zip(a[t], a[bad])]
        t += 1
    out = []
    for i in range(limit):
        d = a[i][i] if i < nr else []
        out.append(_strip_t(d))
    return out


def _strip_t(coeffs) -> LaurentPoly:
    c = upoly.trim(coeffs)
    if not c:
        return LaurentPoly(1, {})
    k = 0
    while c[k] == 0:
        k += 1
    return LaurentPoly.from_coeffs(c[k:]).unit_normal()


def univariate_order(m, free_rank: int | None = None) -> AlexanderPolynomial:
    """Order of the Q[t,t^-1]-module presented by the rows of ``m``.

    ``free_rank`` is the number of free summands tolerated and discarded;
    by default ``max(0, cols - rows)``.  More zero invariant factors than
    that raise ``ValueError("free summand present")``.
    """
    ncols = _check_matrix(m)
    allowed = max(0, ncols - len(m)) if free_rank is None else free_rank
    if ncols == 0:
        return AlexanderPolynomial.one()
    diag = univariate_smith(m)
    zeros = ncols - sum(1 for d in diag if not d.is_zero())
    if zeros > allowed:
        raise ValueError("free summand present")
    prod = LaurentPoly.constant(1, 1)
    for d in diag:
        if not d.is_zero():
            prod = prod * d
    return AlexanderPolynomial(prod)
