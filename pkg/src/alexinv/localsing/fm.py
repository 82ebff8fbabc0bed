"""Exact feasibility of mixed strict/non-strict linear systems (Fourier-Motzkin)."""

from __future__ import annotations

from fractions import Fraction


def _normalize(cons):
    out = set()
    for a, b, strict in cons:
        a = tuple(Fraction(x) for x in a)
        b = Fraction(b)
        piv = next((x for x in a if x), None)
        if piv is None:
            out.add(((0,) * len(a), b, strict))
            continue
        s = abs(piv)
        out.add((tuple(x / s for x in a), b / s, strict))
    return list(out)


def feasible_point(cons, dim: int):
    """A point with a.x > b (strict) or a.x >= b for every (a, b, strict).

    Returns a tuple of Fractions, or None when the system is infeasible.
    """
    cons = _normalize(cons)
    if dim == 0:
        for _, b, strict in cons:
            if (0 <= b) if strict else (0 < b):
                return None
        return ()
    lower, upper, rest = [], [], []
    for a, b, strict in cons:
        c = a[-1]
        if c > 0:
            lower.append((a, b, strict))
        elif c < 0:
            upper.append((a, b, strict))
        else:
            rest.append((a[:-1], b, strict))
    # x_last >= (b - a'.y)/c for lower, <= (a'.y - b)/(-c) for upper
    for al, bl, sl in lower:
        for au, bu, su in upper:
            cl, cu = al[-1], -au[-1]
            a = tuple(cu * x + cl * y for x, y in zip(al[:-1], au[:-1]))
            b = cu * bl + cl * bu
            rest.append((a, b, sl or su))
    sub = feasible_point(rest, dim - 1)
    if sub is None:
        return None
    lo, lo_strict, hi, hi_strict = None, False, None, False
    for a, b, strict in lower:
        v = (b - sum(x * y for x, y in zip(a[:-1], sub))) / a[-1]
        if lo is None or v > lo or (v == lo and strict):
            lo, lo_strict = v, strict
    for a, b, strict in upper:
        v = (b - sum(x * y for x, y in zip(a[:-1], sub))) / a[-1]
        if hi is None or v < hi or (v == hi and strict):
            hi, hi_strict = v, strict
    if lo is None and hi is None:
        x = Fraction(0)
    elif lo is None:
        x = hi - 1
    elif hi is None:
        x = lo + 1
    elif lo < hi:
        x = (lo + hi) / 2
    elif lo == hi and not lo_strict and not hi_strict:
        x = lo
    else:
        return None
    return sub + (x,)


def satisfies(point, cons) -> bool:
    for a, b, strict in cons:
        v = sum(Fraction(x) * y for x, y in zip(a, point))
        if (v <= b) if strict else (v < b):
            return False
    return True
