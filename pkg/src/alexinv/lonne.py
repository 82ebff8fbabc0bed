"""Presentations of discriminant complements for Brieskorn-Pham polynomials
x_1^d + ... + x_n^d and for the projective discriminant of degree-d forms
on P^n.

Generators are indexed by the interior lattice points of the cube
{1..d-1}^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations, product

from .words import GroupPresentation, Word

__all__ = [
    "CubeIndex",
    "cube_points",
    "bp_bilinear",
    "bp_presentation",
    "ordering",
    "delta_word",
    "discriminant_presentation",
    "MAX_POINTS",
]

MAX_POINTS = 4096


@dataclass(frozen=True, order=True)
class CubeIndex:
    n: int
    d: int
    point: tuple

    def __post_init__(self):
        object.__setattr__(self, "point", tuple(int(x) for x in self.point))
        if len(self.point) != self.n:
            raise ValueError("point has wrong dimension")
        if any(not 1 <= x <= self.d - 1 for x in self.point):
            raise ValueError(f"{self.point} outside the cube I_(d={self.d}, n={self.n})")


def cube_points(n: int, d: int, limit: int = MAX_POINTS) -> list[CubeIndex]:
    """Cube points in lexicographic order."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    if (d - 1) ** n > limit:
        raise ValueError(f"(d-1)^n = {(d - 1) ** n} exceeds the size guard {limit}")
    return [CubeIndex(n, d, p) for p in product(range(1, d), repeat=n)]


def bp_bilinear(i: CubeIndex, j: CubeIndex) -> int:
    """Intersection form on vanishing cycles, first matching case wins.

    The mixed-coordinate case fires when two coordinates move in opposite
    directions, i.e. (i_nu - j_nu)(i_mu - j_mu) < 0 for some mu != nu.
    """
    if (i.n, i.d) != (j.n, j.d):
        raise ValueError("indices from different cubes")
    diff = [a - b for a, b in zip(i.point, j.point)]
    if any(abs(x) >= 2 for x in diff):
        return 0
    # some (i_mu - j_mu)(i_nu - j_nu) < 0 iff both signs occur
    if any(x > 0 for x in diff) and any(x < 0 for x in diff):
        return 0
    if not any(diff):
        return -2
    return -1


def _braid_rel(a: Word, b: Word) -> Word:
    return a * b * a * (b * a * b).inverse()


def _commute(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


def bp_presentation(n: int, d: int) -> GroupPresentation:
    pts = cube_points(n, d)
    idx = {p: k for k, p in enumerate(pts)}
    t = [Word.gen(k) for k in range(len(pts))]
    rels = []
    for p, q in combinations(pts, 2):
        a, b = t[idx[p]], t[idx[q]]
        rels.append(_commute(a, b) if bp_bilinear(p, q) == 0 else _braid_rel(a, b))
    for p, q, r in _ordered_triples(pts):
        a, b, c = t[idx[p]], t[idx[q]], t[idx[r]]
        rels.append(a * b * c * a * (b * a * c * b).inverse())
    labels = tuple("t" + ",".join(map(str, p.point)) if n > 1 else f"t{p.point[0]}" for p in pts)
    return GroupPresentation(len(pts), tuple(rels), labels)


def _ordered_triples(pts):
    """Distinct triples i <= j <= k coordinatewise with pairwise nonzero form."""
    for p, q, r in product(pts, repeat=3):
        if p == q or q == r or p == r:
            continue
        if not all(a <= b <= c for a, b, c in zip(p.point, q.point, r.point)):
            continue
        if bp_bilinear(p, q) and bp_bilinear(q, r) and bp_bilinear(r, p):
            yield p, q, r


def _revlex(a: CubeIndex, b: CubeIndex) -> int:
    # a <_0 b iff at the first differing coordinate a is larger
    for x, y in zip(a.point, b.point):
        if x != y:
            return -1 if x > y else 1
    return 0


def ordering(n: int, d: int, k: int) -> list[CubeIndex]:
    """Enumeration Upsilon_k of the cube: k = 0 is reverse lexicographic;
    k >= 1 sorts by the k-th coordinate first, ties broken by <_0."""
    if not 0 <= k <= n:
        raise ValueError("k must lie in 0..n")
    pts = cube_points(n, d)
    if k == 0:
        return sorted(pts, key=cmp_to_key(_revlex))

    def cmp(a, b):
        if a.point[k - 1] != b.point[k - 1]:
            return -1 if a.point[k - 1] < b.point[k - 1] else 1
        return _revlex(a, b)
    return sorted(pts, key=cmp_to_key(cmp))


def delta_word(n: int, d: int, k: int) -> Word:
    pts = cube_points(n, d)
    idx = {p: m for m, p in enumerate(pts)}
    return Word.product(Word.gen(idx[p]) for p in ordering(n, d, k))


def discriminant_presentation(n: int, d: int) -> GroupPresentation:
    """Brieskorn-Pham relations plus (t delta_0)^{d-1} = (delta_0 t^-1)^{d-1}
    for every generator t and delta_0 ... delta_n = 1."""
    base = bp_presentation(n, d)
    deltas = [delta_word(n, d, k) for k in range(n + 1)]
    d0 = deltas[0]
    rels = list(base.relators)
    for g in range(base.num_generators):
        t = Word.gen(g)
        rels.append((t * d0) ** (d - 1) * ((d0 * t.inverse()) ** (d - 1)).inverse())
    rels.append(Word.product(deltas))
    return GroupPresentation(base.num_generators, tuple(rels), base.generator_labels)
