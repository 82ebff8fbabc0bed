"""Exact arithmetic in cyclotomic fields Q(zeta_n) and torsion characters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import upoly

__all__ = [
    "CyclotomicElement",
    "CharacterPoint",
    "evaluate_at_character",
    "cyclotomic_rank",
    "MAX_ORDER",
]

MAX_ORDER = 1000


def _check_order(n: int, cap: int | None = None) -> None:
    cap = MAX_ORDER if cap is None else cap
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    if n > cap:
        raise ValueError(f"cyclotomic order {n} exceeds cap {cap}")


@lru_cache(maxsize=None)
def _modulus(n: int):
    return list(upoly.cyclotomic(n))


@lru_cache(maxsize=None)
def _power_table(n: int):
    """zeta_n^k reduced modulo Phi_n, for k = 0..n-1."""
    phi = _modulus(n)
    deg = len(phi) - 1
    table = []
    cur = [Fraction(1)] + [Fraction(0)] * (deg - 1) if deg else []
    for _ in range(n):
        table.append(tuple(cur) if deg else ())
        # multiply by x and reduce
        shifted = [Fraction(0)] + list(cur)
        if len(shifted) > deg:
            top = shifted[deg]
            shifted = [a - top * b for a, b in zip(shifted[:deg], phi[:deg])]
        cur = shifted
    return table


class CyclotomicElement:
    """Element of Q[x]/Phi_n(x) with dense coefficient vector."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        _check_order(order)
        self.order = order
        deg = len(_modulus(order)) - 1
        c = [Fraction(x) for x in coeffs]
        if len(c) > deg:
            _, c = upoly.divmod_(c, _modulus(order))
        c = list(c) + [Fraction(0)] * (deg - len(c))
        self.coeffs = tuple(c)

    @classmethod
    def zeta_power(cls, n: int, k: int) -> "CyclotomicElement":
        _check_order(n)
        return cls(n, _power_table(n)[k % n])

    @classmethod
    def from_rational(cls, n: int, q) -> "CyclotomicElement":
        return cls(n, [q])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _same(self, other):
        if isinstance(other, CyclotomicElement):
            if other.order != self.order:
                raise ValueError("elements of different cyclotomic fields")
            return other
        return CyclotomicElement(self.order, [other])

    def __add__(self, other):
        other = self._same(other)
        return CyclotomicElement(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._same(other))

    def __mul__(self, other):
        other = self._same(other)
        prod = upoly.mul(list(self.coeffs), list(other.coeffs))
        return CyclotomicElement(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        g, s, _ = upoly.xgcd(upoly.trim(list(self.coeffs)), _modulus(self.order))
        if len(g) != 1:
            raise ArithmeticError("element not invertible")
        return CyclotomicElement(self.order, s)

    def __truediv__(self, other):
        return self * self._same(other).inverse()

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == CyclotomicElement(self.order, [other])
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def conjugate(self) -> "CyclotomicElement":
        """Image under zeta -> zeta^-1."""
        acc = CyclotomicElement(self.order)
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + CyclotomicElement.zeta_power(self.order, -k) * c
        return acc

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self):
        return f"CyclotomicElement({self.order}, {[str(c) for c in self.coeffs]})"


def _frac_mod1(q) -> Fraction:
    q = Fraction(q)
    return q - (q.numerator // q.denominator)


@dataclass(frozen=True)
class CharacterPoint:
    """Character given by rational angles: generator j -> exp(2 pi i angles[j])."""

    angles: tuple

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(_frac_mod1(a) for a in self.angles))

    @property
    def order(self) -> int:
        n = 1
        for a in self.angles:
            d = a.denominator
            n = n * d // gcd(n, d)
        return n

    def is_trivial(self) -> bool:
        return not any(self.angles)

    def conjugate(self) -> "CharacterPoint":
        return CharacterPoint(tuple(-a for a in self.angles))

    def value_exponent(self, vec) -> Fraction:
        """Angle of the character on an abelian element with coordinates vec."""
        return _frac_mod1(sum(a * v for a, v in zip(self.angles, vec)))

    def to_json(self) -> list:
        return [str(a) for a in self.angles]

    @classmethod
    def from_json(cls, data) -> "CharacterPoint":
        return cls(tuple(Fraction(str(a)) for a in data))


def evaluate_at_character(f, chi: CharacterPoint, order: int | None = None) -> CyclotomicElement:
    """Substitute t_j -> zeta_n^(n*angle_j) and reduce modulo Phi_n.

    ``order`` may be any multiple of the character order; by default the
    character order itself.
    """
    if len(chi.angles) != f.num_vars:
        raise ValueError("character and polynomial have different numbers of variables")
    n = chi.order if order is None else order
    if n % chi.order:
        raise ValueError("order must be a multiple of the character order")
    acc = CyclotomicElement(n)
    for e, c in f.items():
        k = chi.value_exponent(e) * n
        acc = acc + CyclotomicElement.zeta_power(n, int(k)) * c
    return acc


def cyclotomic_rank(rows) -> int:
    """Rank over Q(zeta_n) of a matrix of CyclotomicElements."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    rank = 0
    ncols = len(mat[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if not mat[i][c].is_zero()), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][c].inverse()
        for i in range(rank + 1, len(mat)):
            if not mat[i][c].is_zero():
                f = mat[i][c] * inv
                mat[i] = [x - f * y if j >= c else x
                          for j, (x, y) in enumerate(zip(mat[i], mat[rank]))]
        rank += 1
    return rank
