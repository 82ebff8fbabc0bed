"""Spectra and monodromy characteristic polynomials of quasi-homogeneous germs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .. import upoly
from ..laurent import AlexanderPolynomial

__all__ = ["QuasiHomWeights", "SpectrumList", "spectrum_genfn", "local_monodromy_charpoly"]


@dataclass(frozen=True)
class QuasiHomWeights:
    weights: tuple

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        if not ws:
            raise ValueError("at least one weight required")
        for w in ws:
            if not 0 < w < 1:
                raise ValueError(f"weight {w} not in (0, 1)")
        object.__setattr__(self, "weights", ws)

    @property
    def milnor_number(self) -> Fraction:
        return prod((1 / w - 1 for w in self.weights), start=Fraction(1))


@dataclass(frozen=True)
class SpectrumList:
    """Sorted (alpha, multiplicity) pairs."""

    entries: tuple

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def as_counter(self) -> Counter:
        return Counter(dict(self.entries))

    def values(self) -> list[Fraction]:
        return [a for a, _ in self.entries]

    def is_symmetric(self) -> bool:
        c = self.as_counter()
        return all(c[-a] == m for a, m in c.items())


def spectrum_genfn(w: QuasiHomWeights) -> SpectrumList:
    """Expand (1/t) prod (t^w - t)/(1 - t^w) into a finite sum of powers of t."""
    mu = w.milnor_number
    if mu.denominator != 1:
        raise ValueError(f"non-integral Milnor number {mu}")
    n = 1
    for x in w.weights:
        n = n * x.denominator // gcd(n, x.denominator)
    # work in s = t^(1/n)
    num, den = [1], [1]
    for x in w.weights:
        a = int(x * n)
        f = [0] * (n + 1)
        f[a] += 1
        f[n] -= 1
        g = [0] * (a + 1)
        g[0], g[a] = 1, -1
        num = upoly.mul(num, f)
        den = upoly.mul(den, g)
    quo, rem = upoly.divmod_(num, den)
    if rem:
        raise ValueError("generating function is not a polynomial for these weights")
    entries = []
    for k, c in enumerate(quo):
        if c == 0:
            continue
        if c < 0 or Fraction(c).denominator != 1:
            raise ValueError("generating function has non-positive-integer coefficients")
        entries.append((Fraction(k, n) - 1, int(c)))
    out = SpectrumList(tuple(sorted(entries)))
    if out.total() != mu:
        raise AssertionError("spectrum size differs from Milnor number")
    return out


def local_monodromy_charpoly(w: QuasiHomWeights) -> AlexanderPolynomial:
    """prod over the spectrum of (t - exp(2 pi i alpha)), as cyclotomic factors."""
    if len(w.weights) != 2:
        raise ValueError("local monodromy polynomial implemented for plane curve germs")
    spec = spectrum_genfn(w)
    by_angle: Counter = Counter()
    for a, m in spec.entries:
        by_angle[a % 1] += m
    by_order: dict[int, set] = {}
    for a, m in by_angle.items():
        by_order.setdefault(a.denominator, set()).add(m)
    factors = {}
    for n, mults in by_order.items():
        prim = [Fraction(k, n) for k in range(n) if gcd(k, n) == 1]
        counts = {by_angle.get(a, 0) for a in prim}
        if len(counts) != 1:
            raise ArithmeticError(f"eigenvalues of order {n} not Galois-stable")
        factors[n] = counts.pop()
    return AlexanderPolynomial.from_cyclotomic(factors)
