"""Characteristic varieties, depths of characters and homology of abelian covers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Mapping, Sequence

from .cyclotomic import CharacterPoint, CyclotomicElement, cyclotomic_rank, evaluate_at_character
from .intlinalg import rational_rank, smith_form
from .laurent import AlexanderPolynomial, LaurentPoly, minor_ideal, univariate_order
from .words import (AbelianizationMap, GroupPresentation, abelianization, fox_derivatives,
                    fox_jacobian)

__all__ = [
    "CharVarReport",
    "BranchedCoverSpec",
    "characteristic_variety",
    "depth_at_character",
    "depth_from_generator_angles",
    "first_betti",
    "alexander_polynomial",
    "characters_of",
    "unbranched_cover_rank",
    "branched_cover_b1",
    "cyclic_building_data",
]

TRIVIAL_CHARACTER_NOTE = (
    "trivial character: value is the first Betti number; Fitting-ideal "
    "vanishing order differs at (1,...,1)")
RELATIVE_MODULE_NOTE = (
    "Fox matrix presents the module relative to a lifted base point; "
    "generators are (n-i)-minors, so vanishing at the trivial character "
    "is off by one relative to depth")


@dataclass
class CharVarReport:
    depth: int
    fitting_generators: dict
    depth_table: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def vanishes_at(self, i: int, chi: CharacterPoint) -> bool:
        return all(evaluate_at_character(f, chi).is_zero() for f in self.fitting_generators[i])


def first_betti(p: GroupPresentation) -> int:
    rows = [r.exponent_sums(p.num_generators) for r in p.relators]
    return p.num_generators - rational_rank(rows) if rows else p.num_generators


def characteristic_variety(p: GroupPresentation, depth: int = 1,
                           probe_order: int | None = None) -> CharVarReport:
    """Fitting-ideal generators cutting out Char_1..Char_depth.

    With ``probe_order`` every character whose order divides it is also
    evaluated and tabulated with its depth.
    """
    phi = abelianization(p)
    if phi.torsion:
        raise ValueError("torsion abelianization; use depth_at_character")
    m = fox_jacobian(p, phi)
    n = p.num_generators
    gens = {i: minor_ideal(m, i, num_cols=n) for i in range(1, depth + 1)}
    # a presentation with no relators still has Laurent variables to speak of
    for i, g in gens.items():
        gens[i] = [q if q.num_vars == phi.target_rank else LaurentPoly.constant(phi.target_rank, 1)
                   for q in g]
    report = CharVarReport(depth, gens, notes=[RELATIVE_MODULE_NOTE])
    if probe_order:
        for chi in characters_of([probe_order] * phi.target_rank):
            report.depth_table.append((chi, depth_at_character(p, chi, phi=phi)))
    return report


def _generator_angles(p: GroupPresentation, chi: CharacterPoint,
                      phi: AbelianizationMap) -> list[Fraction]:
    if len(chi.angles) != phi.width:
        raise ValueError(
            f"character has {len(chi.angles)} coordinates, abelianization has {phi.width}")
    for a, m in zip(chi.angles[phi.target_rank:], phi.torsion):
        if (a * m).denominator != 1:
            raise ValueError("character not defined on abelianization: "
                             f"angle {a} incompatible with Z/{m}")
    return [chi.value_exponent(img) for img in phi.images]


def depth_from_generator_angles(p: GroupPresentation, angles: Sequence) -> int:
    """Depth of the character x_g -> exp(2 pi i angles[g]).

    The angles must kill every relator.  For the trivial character the
    first Betti number is returned.
    """
    angles = [Fraction(a) % 1 for a in angles]
    if len(angles) != p.num_generators:
        raise ValueError("one angle per generator required")
    chi = CharacterPoint(tuple(angles))
    for r in p.relators:
        if chi.value_exponent(r.exponent_sums(p.num_generators)):
            raise ValueError("character not defined on H_1: a relator has nontrivial value")
    if chi.is_trivial():
        return first_betti(p)
    n = chi.order
    ident = AbelianizationMap(p.num_generators, (),
                              tuple(tuple(int(i == j) for j in range(p.num_generators))
                                    for i in range(p.num_generators)))
    rows = []
    for r in p.relators:
        row = []
        for d in fox_derivatives(r, ident):
            acc = CyclotomicElement(n)
            for vec, c in d.items():
                acc = acc + CyclotomicElement.zeta_power(n, int(chi.value_exponent(vec) * n)) * c
            row.append(acc)
        rows.append(row)
    return p.num_generators - 1 - cyclotomic_rank(rows)


def depth_at_character(p: GroupPresentation, chi: CharacterPoint,
                       phi: AbelianizationMap | None = None) -> int:
    """Depth of chi, given in the coordinates of ``abelianization(p)``."""
    phi = abelianization(p) if phi is None else phi
    return depth_from_generator_angles(p, _generator_angles(p, chi, phi))


def alexander_polynomial(p: GroupPresentation, degrees: Sequence[int] | None = None
                         ) -> AlexanderPolynomial:
    """Order of H_1 of the infinite cyclic cover for x_g -> t^{degrees[g]}.

    Defaults to every generator mapping to t (meridians of a curve).  The
    Fox matrix presents the relative module, whose single free summand is
    discarded.
    """
    degrees = [1] * p.num_generators if degrees is None else list(degrees)
    phi = AbelianizationMap.to_integers(degrees)
    phi.check(p)
    m = fox_jacobian(p, phi)
    if not m:
        if p.num_generators > 1:
            raise ValueError("free summand present")
        return AlexanderPolynomial.one()
    return univariate_order(m, free_rank=1)


def characters_of(orders: Sequence[int]):
    """All characters of Z/n1 + ... + Z/nk, as CharacterPoints."""
    for ks in product(*[range(n) for n in orders]):
        yield CharacterPoint(tuple(Fraction(k, n) for k, n in zip(ks, orders)))


def _check_surjective(images: Sequence[Sequence[int]], orders: Sequence[int]) -> None:
    k = len(orders)
    rows = [list(v) for v in images] + [[n if i == j else 0 for j in range(k)]
                                        for i, n in enumerate(orders)]
    diag, _, _ = smith_form(rows, k)
    if len(diag) < k or any(d != 1 for d in diag[:k]):
        raise ValueError("map is not surjective onto A")


def unbranched_cover_rank(p: GroupPresentation, orders: Sequence[int],
                          generator_images: Sequence[Sequence[int]]) -> int:
    """b_1 of the unbranched abelian cover defined by x_g -> generator_images[g] in A.

    A is Z/orders[0] + ... ; the map must kill relators and be onto.
    """
    orders = [int(n) for n in orders]
    if any(n < 1 for n in orders):
        raise ValueError("A must be finite")
    if len(generator_images) != p.num_generators:
        raise ValueError("one image per generator required")
    for r in p.relators:
        s = r.exponent_sums(p.num_generators)
        for j, n in enumerate(orders):
            if sum(c * v[j] for c, v in zip(s, generator_images)) % n:
                raise ValueError("map does not factor through H_1")
    _check_surjective(generator_images, orders)
    total = 0
    for chi in characters_of(orders):
        angles = [chi.value_exponent(v) for v in generator_images]
        total += depth_from_generator_angles(p, angles)
    return total


@dataclass(frozen=True)
class BranchedCoverSpec:
    """Abelian cover branched along components D_1..D_s of a divisor.

    ``meridian_images[i]`` is the image in A = sum Z/orders[j] of the
    meridian of D_i.
    """

    orders: tuple
    meridian_images: tuple

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        object.__setattr__(self, "meridian_images",
                           tuple(tuple(int(x) for x in v) for v in self.meridian_images))
        if any(n < 1 for n in self.orders):
            raise ValueError("A must be finite")
        for v in self.meridian_images:
            if len(v) != len(self.orders):
                raise ValueError("meridian image has wrong length")
        _check_surjective(self.meridian_images, self.orders)

    def characters(self):
        return characters_of(self.orders)

    def active_components(self, chi: CharacterPoint) -> frozenset:
        return frozenset(i for i, v in enumerate(self.meridian_images) if chi.value_exponent(v))


DepthOracle = Callable[[CharacterPoint, frozenset], int]


def branched_cover_b1(spec: BranchedCoverSpec,
                      depth_oracle: DepthOracle | Mapping) -> int:
    """First Betti number of a resolved abelian cover of a simply connected surface.

    Sums d(D^chi, chi) over nontrivial characters, where D^chi keeps the
    components on whose meridian chi is nontrivial.
    """
    if isinstance(depth_oracle, Mapping):
        table = depth_oracle

        def depth_oracle(chi, active):
            return table[chi]
    total = 0
    for chi in spec.characters():
        if chi.is_trivial():
            continue
        d = depth_oracle(chi, spec.active_components(chi))
        if d < 0:
            raise ValueError("negative depth from oracle")
        total += d
    return total


def cyclic_building_data(degrees: Sequence[int], order: int, weights: Sequence[int]) -> int:
    """Degree of L_chi = sum (nu_i/d) deg D_i for a character of Z/d on P^2 - D."""
    if len(degrees) != len(weights):
        raise ValueError("one weight per component required")
    total = sum(int(n) * int(dg) for n, dg in zip(weights, degrees))
    if total % order:
        raise ValueError("character not defined on H1(P^2 - D)")
    return total // order
