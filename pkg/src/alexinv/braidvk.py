"""Braid monodromy data, real line arrangements and van Kampen presentations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .words import BraidWord, GroupPresentation, Word, apply_braid

__all__ = [
    "BraidMonodromyData",
    "RealArrangement",
    "vk_presentation",
    "plane_curve_rho",
    "real_arrangement_monodromy",
    "rotation_candidates",
]


def plane_curve_rho(d: int) -> Word:
    """x1 x2 ... xd: the loop around all points of a generic vertical line."""
    if d < 1:
        raise ValueError("d must be positive")
    return Word(tuple((i, 1) for i in range(d)))


@dataclass(frozen=True)
class BraidMonodromyData:
    strands: int
    monodromies: tuple = ()
    rho: Word | None = None

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("need at least one strand")
        for b in self.monodromies:
            if b.num_strands != self.strands:
                raise ValueError("braid strand counts differ")
        if self.rho is not None:
            if not isinstance(self.rho, Word):
                object.__setattr__(self, "rho", Word(tuple(self.rho)))
            if any(g >= self.strands for g in self.rho.generators()):
                raise IndexError("rho uses a generator outside F_d")
        object.__setattr__(self, "monodromies", tuple(self.monodromies))

    def total_braid(self) -> BraidWord:
        out = BraidWord.identity(self.strands)
        for b in self.monodromies:
            out = out * b
        return out

    def affine(self) -> "BraidMonodromyData":
        return BraidMonodromyData(self.strands, self.monodromies, None)

    def to_json(self) -> dict:
        return {"strands": self.strands,
                "braids": [b.to_json() for b in self.monodromies],
                "rho": None if self.rho is None else self.rho.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "BraidMonodromyData":
        d = int(data["strands"])
        braids = []
        for b in data.get("braids", []):
            if isinstance(b, dict):
                b = BraidWord.from_json(b)
            else:
                b = BraidWord(d, tuple((int(i), int(s)) for i, s in b))
            braids.append(b)
        rho = data.get("rho")
        return cls(d, tuple(braids), None if rho is None else Word.from_json(rho))


def vk_presentation(data: BraidMonodromyData) -> GroupPresentation:
    """Zariski-van Kampen presentation: x_i = beta_j(x_i) for all i, j, plus rho."""
    d = data.strands
    rels = []
    for beta in data.monodromies:
        for i in range(d):
            x = Word.gen(i)
            r = (apply_braid(beta, x) * x.inverse()).cyclically_reduced()
            if not r.is_identity():
                rels.append(r)
    if data.rho is not None and not data.rho.is_identity():
        rels.append(data.rho)
    seen, uniq = set(), []
    for r in rels:
        key = next(iter(GroupPresentation(d, (r,)).relator_set()))
        if key not in seen:
            seen.add(key)
            uniq.append(r)
    return GroupPresentation(d, tuple(uniq))


@dataclass(frozen=True)
class RealArrangement:
    """Lines a*x + b*y = c with rational coefficients."""

    lines: tuple

    def __post_init__(self):
        lines = tuple(tuple(Fraction(v) for v in ln) for ln in self.lines)
        for a, b, c in lines:
            if a == 0 and b == 0:
                raise ValueError("degenerate line 0 = c")
        for i in range(len(lines)):
            for j in range(i):
                if _same_line(lines[i], lines[j]):
                    raise ValueError(f"lines {j} and {i} coincide")
        object.__setattr__(self, "lines", lines)

    def rotated(self, cos: Fraction, sin: Fraction) -> "RealArrangement":
        # rotating points by theta rotates normals by theta as well
        return RealArrangement(tuple((a * cos - b * sin, a * sin + b * cos, c)
                                     for a, b, c in self.lines))

    def to_json(self) -> dict:
        from .serialize import frac_str
        return {"lines": [[frac_str(v) for v in ln] for ln in self.lines]}

    @classmethod
    def from_json(cls, data: dict) -> "RealArrangement":
        from .serialize import parse_frac
        return cls(tuple(tuple(parse_frac(v) for v in ln) for ln in data["lines"]))


def _same_line(l1, l2) -> bool:
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    return a1 * b2 == a2 * b1 and a1 * c2 == a2 * c1 and b1 * c2 == b2 * c1


def _rotation(k: int) -> tuple[Fraction, Fraction]:
    # rational rotation with tan(theta/2) = 1/k
    return Fraction(k * k - 1, k * k + 1), Fraction(2 * k, k * k + 1)


def rotation_candidates(seed: int | None = None, retries: int = 100):
    """Deterministic rational rotations first, then a seeded random stream."""
    for k in (7, 11, 13, 17, 19, 23, 29, 31):
        yield _rotation(k)
    rng = random.Random(seed if seed is not None else 0)
    for _ in range(retries):
        yield _rotation(rng.randint(2, 10 ** 6))


def _slopes_and_points(arr: RealArrangement):
    """Return (slope, intercept) per line and the multiple points, or None if
    some line is vertical or two points share an x coordinate."""
    lines = []
    for a, b, c in arr.lines:
        if b == 0:
            return None
        lines.append((-a / b, c / b))
    points: dict = {}
    for i in range(len(lines)):
        for j in range(i):
            (m1, q1), (m2, q2) = lines[i], lines[j]
            if m1 == m2:
                continue
            x = (q2 - q1) / (m1 - m2)
            y = m1 * x + q1
            points.setdefault((x, y), set()).update((i, j))
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        return None
    return lines, sorted(points.items())


def real_arrangement_monodromy(arr: RealArrangement, seed: int | None = None
                               ) -> BraidMonodromyData:
    """Braid monodromy of a real line arrangement via a left-to-right sweep.

    Strands are numbered by y-order on a vertical line left of every
    multiple point.  The loop around the j-th point passes above the earlier
    points, picking up a negative half twist of each block passed; its
    monodromy is that path conjugating the positive full twist of the
    block.
    """
    d = len(arr.lines)
    if d == 0:
        raise ValueError("empty arrangement")
    for cos, sin in rotation_candidates(seed):
        data = _slopes_and_points(arr.rotated(cos, sin))
        if data is not None:
            break
    else:
        raise ValueError("degenerate after rotation retries")
    lines, points = data
    if points:
        x0 = points[0][0][0] - 1
    else:
        x0 = Fraction(0)
    order = sorted(range(d), key=lambda i: (lines[i][0] * x0 + lines[i][1], -lines[i][0]))
    path = BraidWord.identity(d)
    monos = []
    for (x, y), members in points:
        pos = sorted(order.index(i) for i in members)
        p, m = pos[0], len(pos)
        if pos != list(range(p, p + m)):
            raise AssertionError("lines through a point are not adjacent in the sweep")
        start = p + 1
        twist = BraidWord.full_twist(d, start, m)
        monos.append(twist.conjugate(path))
        path = path * BraidWord.half_twist(d, start, m).inverse()
        order[p:p + m] = reversed(order[p:p + m])
    return BraidMonodromyData(d, tuple(monos), plane_curve_rho(d))
