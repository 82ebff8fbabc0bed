"""Dense univariate polynomials over Q as coefficient lists (low degree first)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p, c):
    return trim([c * a for a in p])


def power(p, n):
    out = [1]
    for _ in range(n):
        out = mul(out, p)
    return out


def divmod_(p, q):
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    while len(r) >= len(q) and r:
        k = len(r) - len(q)
        c = r[-1] / lead
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        r = trim(r)
    return trim(quot), r


def exact_div(p, q):
    quo, rem = divmod_(p, q)
    if rem:
        raise ArithmeticError("division not exact")
    return quo


def divides(q, p) -> bool:
    return not divmod_(p, q)[1]


def monic(p):
    p = trim(p)
    if not p:
        return []
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def pgcd(p, q):
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def xgcd(p, q):
    """Return (g, s, t) with s*p + t*q = g monic."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    lead = Fraction(r0[-1])
    return scale(r0, 1 / lead), scale(s0, 1 / lead), scale(t0, 1 / lead)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def primitive(p):
    """Integer primitive part with positive leading coefficient."""
    p = trim(p)
    if not p:
        return []
    fr = [Fraction(c) for c in p]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = exact_div(p, list(cyclotomic(d)))
    return tuple(int(c) for c in p)


def euler_phi(n: int) -> int:
    return len(cyclotomic(n)) - 1


def cyclotomic_factorization(p, max_order: int | None = None):
    """Split p into cyclotomic factors.

    Returns ``(factors, rest)`` where factors maps n to the exponent of
    Phi_n and rest is the primitive cofactor (``[1]`` when p is a product
    of cyclotomic polynomials up to a constant).
    """
    rest = primitive(p)
    if not rest:
        raise ValueError("zero polynomial has no factorization")
    deg = len(rest) - 1
    bound = max_order if max_order is not None else max(2, 2 * deg * deg + 2)
    factors = {}
    n = 1
    while len(rest) > 1 and n <= bound:
        phi = list(cyclotomic(n))
        if len(phi) - 1 <= len(rest) - 1:
            while len(rest) > 1:
                quo, r = divmod_(rest, phi)
                if r:
                    break
                rest = primitive(quo)
                factors[n] = factors.get(n, 0) + 1
        n += 1
    return factors, rest
