"""Bundled resolution data and weights for common plane-curve germs.

Toric resolution of a Newton-nondegenerate germ: every primitive ray
w = (wx, wy) of a fan refining the Newton dual fan gives a divisor with

    a = ord_w(f),  c = wx + wy - 1,  e(x^i y^j) = i*wx + j*wy.

For x^p - y^q with p, q coprime, the rays needed are those on the
Stern-Brocot path to (q, p); extra non-exceptional rays from a smooth
refinement only contribute vacuous inequalities.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from urllib.parse import parse_qs

from .polytopes import Component, ResolutionData, TestGerm
from .spectrum import QuasiHomWeights

__all__ = ["CatalogEntry", "lookup", "names", "catalog_listing", "default_germs"]


class CatalogEntry:
    def __init__(self, name, resolution, weights, provenance):
        self.name = name
        self.resolution = resolution
        self.weights = weights
        self.provenance = provenance

    def to_json(self) -> dict:
        from ..serialize import frac_str
        return {"name": self.name,
                "resolution": self.resolution.to_json(),
                "weights": None if self.weights is None else [frac_str(w) for w in self.weights.weights],
                "provenance": self.provenance}


def default_germs(max_degree: int = 6):
    """Monomials x^a y^b with a + b <= max_degree, unit first."""
    return [(a, b) for s in range(max_degree + 1) for a in range(s, -1, -1) for b in [s - a]]


def _label(a: int, b: int) -> str:
    parts = []
    for v, k in (("x", a), ("y", b)):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts) or "1"


def _toric(rays, ord_f, max_degree=6, branches=1, a_vectors=None, provenance=""):
    comps = []
    for k, w in enumerate(rays):
        a = a_vectors[k] if a_vectors else (ord_f(w),)
        comps.append(Component(tuple(a), w[0] + w[1] - 1))
    germs = [TestGerm(_label(i, j), tuple(i * w[0] + j * w[1] for w in rays))
             for i, j in default_germs(max_degree)]
    return ResolutionData(branches, tuple(comps), tuple(germs), provenance)


def _stern_brocot(q: int, p: int):
    """Primitive vectors on the Stern-Brocot path from (1,1) to (q, p), ending with it."""
    out = []
    lo, hi = (0, 1), (1, 0)
    while True:
        med = (lo[0] + hi[0], lo[1] + hi[1])
        out.append(med)
        if med == (q, p):
            return out
        if med[0] * p < q * med[1]:
            lo = med
        else:
            hi = med


def torus(p: int, q: int, max_degree: int = 6) -> CatalogEntry:
    """x^p = y^q, p, q >= 2 coprime."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError("torus germ needs coprime p, q >= 2")
    rays = _stern_brocot(q, p)
    rd = _toric(rays, lambda w: min(p * w[0], q * w[1]), max_degree,
                provenance=f"toric resolution of x^{p} - y^{q} along the Stern-Brocot path")
    return CatalogEntry(f"torus_p_q?p={p}&q={q}", rd,
                        QuasiHomWeights((Fraction(1, p), Fraction(1, q))),
                        rd.provenance)


def ordinary(m: int, max_degree: int = 6) -> CatalogEntry:
    """m distinct lines through the origin, resolved by one blow-up."""
    if m < 2:
        raise ValueError("ordinary point needs m >= 2")
    rd = _toric([(1, 1)], None, max_degree, branches=m, a_vectors=[(1,) * m],
                provenance=f"one blow-up separates the {m} branches")
    return CatalogEntry(f"ordinary?m={m}", rd,
                        QuasiHomWeights((Fraction(1, m), Fraction(1, m))), rd.provenance)


def node(max_degree: int = 6) -> CatalogEntry:
    e = ordinary(2, max_degree)
    return CatalogEntry("node", e.resolution, e.weights, "xy = 0, one blow-up")


def cusp(max_degree: int = 6) -> CatalogEntry:
    e = torus(2, 3, max_degree)
    return CatalogEntry("cusp", e.resolution, e.weights, "x^2 = y^3, three blow-ups")


def tacnode(max_degree: int = 6) -> CatalogEntry:
    """y(y - x^2) = 0: two smooth branches with contact order 2."""
    rays = [(1, 1), (1, 2)]
    a_vectors = [(1, 1), (2, 2)]
    rd = _toric(rays, None, max_degree, branches=2, a_vectors=a_vectors,
                provenance="y(y - x^2) = 0, two blow-ups")
    return CatalogEntry("tacnode", rd, QuasiHomWeights((Fraction(1, 2), Fraction(1, 4))),
                        rd.provenance)


def smooth(max_degree: int = 6) -> CatalogEntry:
    """A smooth branch y = 0; the divisor itself stands in for E with a = 1, c = 0."""
    germs = [TestGerm(_label(i, j), (j,)) for i, j in default_germs(max_degree)]
    rd = ResolutionData(1, (Component((1,), 0),), tuple(germs), "smooth branch, no blow-up")
    return CatalogEntry("smooth", rd, None, rd.provenance)


_FIXED = {"node": node, "cusp": cusp, "tacnode": tacnode, "smooth": smooth}


def names() -> list[str]:
    return sorted(_FIXED) + ["ordinary?m=<m>", "torus_p_q?p=<p>&q=<q>"]


def lookup(name: str) -> CatalogEntry:
    """Resolve a catalog name such as "cusp", "ordinary?m=3" or "torus_p_q?p=3&q=4"."""
    base, _, query = name.strip().partition("?")
    if base in _FIXED and not query:
        return _FIXED[base]()
    try:
        params = {k: int(v[0]) for k, v in parse_qs(query, strict_parsing=True).items()}
    except ValueError:
        raise KeyError(f"unknown catalog name {name!r}") from None
    if base == "ordinary" and set(params) == {"m"}:
        return ordinary(params["m"])
    if base == "torus_p_q" and set(params) == {"p", "q"}:
        return torus(params["p"], params["q"])
    raise KeyError(f"unknown catalog name {name!r}")


def catalog_listing() -> list[dict]:
    entries = [lookup(n) for n in sorted(_FIXED)]
    entries += [ordinary(3), torus(2, 5), torus(3, 4)]
    return [e.to_json() for e in entries]
