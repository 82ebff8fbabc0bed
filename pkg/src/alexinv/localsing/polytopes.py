"""Polytopes and ideals of quasi-adjunction, and LCT polytopes, from resolution data.

Coordinates are gamma_i = (j_i + 1)/m_i in (0, 1]^r.  A test germ phi
belongs to the ideal at gamma when, for every exceptional component E_k,

    sum_i a_{k,i} gamma_i > sum_i a_{k,i} - e_k(phi) - c_k - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import floor

from ..intlinalg import rational_rank, solve_square
from .fm import feasible_point, satisfies

__all__ = [
    "Component",
    "TestGerm",
    "ResolutionData",
    "QuasiAdjPolytope",
    "quasiadjunction_polytopes",
    "faces_of_quasiadjunction",
    "lct_polytope",
    "lct_threshold",
    "ideal_at",
    "multiplier_ideal_at",
]


@dataclass(frozen=True)
class Component:
    a: tuple
    c: int


@dataclass(frozen=True)
class TestGerm:
    label: str
    e: tuple


@dataclass(frozen=True)
class ResolutionData:
    branches: int
    exceptional: tuple
    test_germs: tuple
    provenance: str = ""

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Component) else Component(tuple(c[0]), int(c[1]))
                      for c in self.exceptional)
        germs = tuple(g if isinstance(g, TestGerm) else TestGerm(str(g[0]), tuple(g[1]))
                      for g in self.test_germs)
        for comp in comps:
            if len(comp.a) != self.branches:
                raise ValueError("multiplicity vector length differs from branch count")
            if any(x < 0 for x in comp.a) or not any(comp.a):
                raise ValueError("multiplicities must be nonnegative with a nonzero entry")
            if comp.c < 0:
                raise ValueError("discrepancy c_k must be nonnegative")
        for g in germs:
            if len(g.e) != len(comps):
                raise ValueError(f"test germ {g.label} needs one order per component")
        object.__setattr__(self, "exceptional", comps)
        object.__setattr__(self, "test_germs", germs)

    def unit_germ(self) -> TestGerm | None:
        return next((g for g in self.test_germs if not any(g.e)), None)

    def to_json(self) -> dict:
        return {"branches": self.branches,
                "exceptional": [{"a": list(c.a), "c": c.c} for c in self.exceptional],
                "test_germs": [{"label": g.label, "e": list(g.e)} for g in self.test_germs]}

    @classmethod
    def from_json(cls, data: dict) -> "ResolutionData":
        return cls(int(data["branches"]),
                   tuple(Component(tuple(int(x) for x in c["a"]), int(c["c"]))
                         for c in data["exceptional"]),
                   tuple(TestGerm(str(g["label"]), tuple(int(x) for x in g["e"]))
                         for g in data["test_germs"]),
                   data.get("provenance", ""))


def _halfspace(comp: Component, e: int):
    """(a, b) with membership a.gamma > b."""
    a = tuple(Fraction(x) for x in comp.a)
    return a, Fraction(sum(comp.a) - e - comp.c - 1)


def ideal_at(rd: ResolutionData, gamma) -> frozenset:
    """Labels of test germs satisfying every component inequality at gamma."""
    out = set()
    for g in rd.test_germs:
        if all(sum(x * y for x, y in zip(a, gamma)) > b
               for a, b in (_halfspace(c, e) for c, e in zip(rd.exceptional, g.e))):
            out.add(g.label)
    return frozenset(out)


def multiplier_ideal_at(rd: ResolutionData, gamma) -> frozenset:
    """Same membership through the multiplier-ideal rule
    e_k + c_k - floor(sum (1 - gamma_i) a_{k,i}) >= 0."""
    out = set()
    for g in rd.test_germs:
        ok = True
        for comp, e in zip(rd.exceptional, g.e):
            s = sum((1 - Fraction(x)) * y for x, y in zip(gamma, comp.a))
            if e + comp.c - floor(s) < 0:
                ok = False
                break
        if ok:
            out.add(g.label)
    return frozenset(out)


@dataclass
class QuasiAdjPolytope:
    """Region given by halfspaces (a, b, strict): a.x > b or a.x >= b.

    ``halfspaces`` excludes the cube bounds, which are implicit.
    """

    dim: int
    halfspaces: list
    attached_ideal: frozenset = frozenset()
    sample: tuple | None = None
    cube: str = "half-open"   # (0,1]^r for quasi-adjunction, [0,1]^r for LCT
    binding: list = field(default_factory=list)

    def cube_constraints(self):
        out = []
        for i in range(self.dim):
            e = tuple(Fraction(int(i == j)) for j in range(self.dim))
            out.append((e, Fraction(0), self.cube == "half-open"))
            out.append((tuple(-x for x in e), Fraction(-1), False))
        return out

    def constraints(self):
        return list(self.halfspaces) + self.cube_constraints()

    def contains(self, point) -> bool:
        return satisfies(point, self.constraints())

    def closure_contains(self, point) -> bool:
        return satisfies(point, [(a, b, False) for a, b, _ in self.constraints()])

    def vertices(self) -> list[tuple]:
        """Vertices of the closure, by intersecting every r-subset of facets."""
        closed = [(a, b) for a, b, _ in self.constraints()]
        found = set()
        for sub in combinations(closed, self.dim):
            if rational_rank([a for a, _ in sub]) < self.dim:
                continue
            x = solve_square([a for a, _ in sub], [b for _, b in sub])
            if x is None:
                continue
            if all(sum(p * q for p, q in zip(a, x)) >= b for a, b in closed):
                found.add(tuple(x))
        return sorted(found)

    def to_json(self) -> dict:
        from ..serialize import frac_str
        return {"dim": self.dim,
                "halfspaces": [{"a": [frac_str(x) for x in a], "b": frac_str(b),
                                "strict": s} for a, b, s in self.halfspaces],
                "ideal": sorted(self.attached_ideal),
                "sample": None if self.sample is None else [frac_str(x) for x in self.sample],
                "vertices": [[frac_str(x) for x in v] for v in self.vertices()],
                "binding": list(self.binding)}


def _hyperplanes(rd: ResolutionData):
    """Distinct (a, b) for all (component, test germ) inequalities."""
    seen = {}
    for g in rd.test_germs:
        for comp, e in zip(rd.exceptional, g.e):
            a, b = _halfspace(comp, e)
            s = max(abs(x) for x in a)
            key = (tuple(x / s for x in a), b / s)
            seen.setdefault(key, None)
    return list(seen)


def _cube(r: int):
    out = []
    for i in range(r):
        e = tuple(Fraction(int(i == j)) for j in range(r))
        out.append((e, Fraction(0), True))
        out.append((tuple(-x for x in e), Fraction(-1), False))
    return out


def quasiadjunction_polytopes(rd: ResolutionData) -> list[QuasiAdjPolytope]:
    """Partition of (0,1]^r into cells on which every inequality has a fixed truth value.

    A point on a hyperplane fails the strict inequality, so it lies in the
    cell with the smaller ideal.
    """
    if not rd.test_germs:
        raise ValueError("empty test-germ list")
    r = rd.branches
    hyps = _hyperplanes(rd)
    base = _cube(r)
    cells = []

    def dfs(k, chosen):
        if k == len(hyps):
            cells.append((chosen, feasible_point(base + chosen, r)))
            return
        a, b = hyps[k]
        above = (a, b, True)
        below = (tuple(-x for x in a), -b, False)
        sides = [c for c in (above, below) if feasible_point(base + chosen + [c], r) is not None]
        if len(sides) == 1:
            # the hyperplane misses this region; its sign is already decided
            dfs(k + 1, chosen)
            return
        for c in sides:
            dfs(k + 1, chosen + [c])

    dfs(0, [])
    out = []
    for chosen, pt in cells:
        hs = [(a, b, s) for a, b, s in chosen if not _redundant(a, b, s, base, chosen, r)]
        out.append(QuasiAdjPolytope(r, hs, ideal_at(rd, pt), pt))
    out.sort(key=lambda q: (len(q.attached_ideal), q.sample))
    return out


def _redundant(a, b, strict, base, chosen, r) -> bool:
    """True when dropping the constraint does not enlarge the region."""
    others = [c for c in chosen if c != (a, b, strict)]
    flipped = (tuple(-x for x in a), -b, not strict)
    return feasible_point(base + others + [flipped], r) is None


def faces_of_quasiadjunction(rd: ResolutionData) -> list[tuple]:
    """Hyperplanes (a, b) across which the attached ideal changes."""
    cells = quasiadjunction_polytopes(rd)
    faces = []
    for a, b in _hyperplanes(rd):
        for q in cells:
            on_plane = q.constraints() + [(a, b, False), (tuple(-x for x in a), -b, False)]
            pt = feasible_point(on_plane, rd.branches)
            if pt is None:
                continue
            # step just across the hyperplane, into the side where it holds
            eps = Fraction(1, 10 ** 6)
            norm = sum(x * x for x in a)
            above = tuple(p + eps * x / norm for p, x in zip(pt, a))
            if ideal_at(rd, pt) != ideal_at(rd, above):
                faces.append((a, b))
                break
    return faces


def _gamma_faces_1d(rd: ResolutionData) -> list[Fraction]:
    return sorted({b / a[0] for a, b in faces_of_quasiadjunction(rd)})


def lct_polytope(rd: ResolutionData) -> QuasiAdjPolytope:
    """Involution image of the closed region where the unit germ extends.

    In lambda = 1 - gamma the result is {sum_i a_{k,i} lambda_i <= c_k + 1}
    inside [0,1]^r.
    """
    unit = rd.unit_germ()
    if unit is None:
        raise ValueError("resolution data lacks the unit germ")
    r = rd.branches
    hs = []
    for comp, e in zip(rd.exceptional, unit.e):
        a, b = _halfspace(comp, e)
        # a.gamma >= b with gamma = 1 - lambda  ->  -a.lambda >= b - sum(a)
        hs.append((tuple(-x for x in a), b - sum(a), False))
    poly = QuasiAdjPolytope(r, hs, frozenset(), None, cube="closed")
    verts = poly.vertices()
    binding = []
    for k, (a, b, _) in enumerate(hs):
        on = [v for v in verts if sum(x * y for x, y in zip(a, v)) == b]
        if on and _affine_dim(on) == r - 1:
            binding.append(k)
    poly.binding = binding
    poly.sample = verts[0] if verts else None
    return poly


def _affine_dim(points) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rational_rank([[x - y for x, y in zip(p, p0)] for p in points[1:]]) if len(points) > 1 else 0


def lct_threshold(rd: ResolutionData) -> Fraction:
    """Log canonical threshold of the whole germ: the diagonal point of the LCT polytope."""
    return min(Fraction(c.c + 1, sum(c.a)) for c in rd.exceptional)
