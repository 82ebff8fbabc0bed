"""Free-group words, finite presentations, abelianization and Fox calculus.

Words are stored run-length encoded as tuples of ``(generator, exponent)``
syllables with 0-based generator indices.  Braid words act on free groups
through the Artin representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .intlinalg import smith_form

__all__ = [
    "Word",
    "GroupPresentation",
    "AbelianizationMap",
    "BraidWord",
    "normalize_word",
    "apply_braid",
    "abelianization",
    "fox_derivatives",
    "fox_jacobian",
    "simplify_presentation",
]


def normalize_word(letters: Iterable[Sequence[int]]) -> tuple:
    """Freely reduce a raw sequence of (generator, exponent) pairs."""
    out: list[list[int]] = []
    for gen, exp in letters:
        if gen < 0:
            raise ValueError(f"negative generator index {gen}")
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True)
class Word:
    syllables: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", normalize_word(self.syllables))

    @classmethod
    def gen(cls, index: int, exp: int = 1) -> "Word":
        return cls(((index, exp),))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Word":
        """Build from signed 1-based letters: ``[1, -2]`` is x0 * x1^-1."""
        return cls(tuple((abs(l) - 1, 1 if l > 0 else -1) for l in letters))

    @classmethod
    def product(cls, words: Iterable["Word"]) -> "Word":
        syl: list = []
        for w in words:
            syl.extend(w.syllables)
        return cls(tuple(syl))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.syllables * abs(n))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def conjugate(self, by: "Word") -> "Word":
        """Return ``by * self * by^-1``."""
        return by * self * by.inverse()

    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def letters(self) -> list[tuple[int, int]]:
        """Expanded letters as (generator, +-1)."""
        out = []
        for g, e in self.syllables:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def generators(self) -> set[int]:
        return {g for g, _ in self.syllables}

    def exponent_sums(self, n: int) -> list[int]:
        v = [0] * n
        for g, e in self.syllables:
            v[g] += e
        return v

    def cyclically_reduced(self) -> "Word":
        syl = self.syllables
        while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
            # rotate the last run to the front; normalize merges it
            syl = normalize_word((syl[-1],) + syl[:-1])
        return Word(syl)

    def to_json(self) -> list:
        return [[g, e] for g, e in self.syllables]

    @classmethod
    def from_json(cls, data) -> "Word":
        return cls(tuple((int(g), int(e)) for g, e in data))

    def text(self, labels: Sequence[str] | None = None) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for g, e in self.syllables:
            name = labels[g] if labels else f"x{g + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Word({self.text()})"


def _canonical_relator(w: Word) -> tuple:
    """Representative of the cyclic class of w and w^-1, for set comparisons."""
    letters = w.letters()
    if not letters:
        return ()
    inv = [(g, -s) for g, s in reversed(letters)]
    best = None
    for seq in (letters, inv):
        for k in range(len(seq)):
            rot = tuple(seq[k:] + seq[:k])
            if best is None or rot < best:
                best = rot
    return best


@dataclass(frozen=True)
class GroupPresentation:
    num_generators: int
    relators: tuple = ()
    generator_labels: tuple | None = None

    def __post_init__(self):
        rels = []
        for r in self.relators:
            r = r if isinstance(r, Word) else Word(tuple(r))
            r = r.cyclically_reduced()
            for g in r.generators():
                if g >= self.num_generators:
                    raise IndexError(
                        f"relator uses generator {g} but only {self.num_generators} exist")
            rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))
        if self.generator_labels is not None:
            labels = tuple(self.generator_labels)
            if len(labels) != self.num_generators:
                raise ValueError("generator_labels length mismatch")
            object.__setattr__(self, "generator_labels", labels)

    def labels(self) -> list[str]:
        if self.generator_labels:
            return list(self.generator_labels)
        return [f"x{i + 1}" for i in range(self.num_generators)]

    def without_trivial_relators(self) -> "GroupPresentation":
        return GroupPresentation(
            self.num_generators,
            tuple(r for r in self.relators if not r.is_identity()),
            self.generator_labels)

    def relator_set(self) -> frozenset:
        """Relators up to cyclic permutation and inversion."""
        return frozenset(_canonical_relator(r) for r in self.relators if not r.is_identity())

    def to_json(self) -> dict:
        return {"generators": self.labels(),
                "relators": [r.to_json() for r in self.relators]}

    @classmethod
    def from_json(cls, data: dict) -> "GroupPresentation":
        gens = data["generators"]
        if isinstance(gens, int):
            n, labels = gens, None
        else:
            n, labels = len(gens), tuple(str(g) for g in gens)
        rels = tuple(Word.from_json(r) for r in data.get("relators", []))
        return cls(n, rels, labels)

    def text(self) -> str:
        labels = self.labels()
        rels = ", ".join(r.text(labels) for r in self.relators)
        return f"< {', '.join(labels)} | {rels} >"


@dataclass(frozen=True)
class BraidWord:
    num_strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.num_strands < 1:
            raise ValueError("a braid needs at least one strand")
        lets = []
        for i, s in self.letters:
            if not 1 <= i <= self.num_strands - 1:
                raise IndexError(f"sigma_{i} out of range for {self.num_strands} strands")
            if s not in (1, -1):
                raise ValueError("braid letter signs must be +1 or -1")
            lets.append((int(i), int(s)))
        object.__setattr__(self, "letters", tuple(lets))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.num_strands != self.num_strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.num_strands, self.letters + other.letters)

    def __pow__(self, n: int) -> "BraidWord":
        base = self if n >= 0 else self.inverse()
        return BraidWord(self.num_strands, base.letters * abs(n))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.num_strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """Return ``by * self * by^-1``."""
        return by * self * by.inverse()

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    @classmethod
    def half_twist(cls, n: int, start: int = 1, size: int | None = None) -> "BraidWord":
        """Positive half twist on strands start..start+size-1 (1-based)."""
        size = n - start + 1 if size is None else size
        lets = []
        for top in range(size - 1, 0, -1):
            lets.extend((start + k, 1) for k in range(top))
        return cls(n, tuple(lets))

    @classmethod
    def full_twist(cls, n: int, start: int = 1, size: int | None = None) -> "BraidWord":
        size = n - start + 1 if size is None else size
        cyc = tuple((start + k, 1) for k in range(size - 1))
        return cls(n, cyc * size)

    def to_json(self) -> dict:
        return {"strands": self.num_strands, "word": [[i, s] for i, s in self.letters]}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls(int(data["strands"]), tuple((int(i), int(s)) for i, s in data["word"]))


def _sigma_images(i: int, sign: int) -> dict[int, Word]:
    a, b = i - 1, i
    ta, tb = Word.gen(a), Word.gen(b)
    if sign > 0:
        return {a: tb, b: tb.inverse() * ta * tb}
    return {a: ta * tb * ta.inverse(), b: ta}


def _substitute(w: Word, images: dict[int, Word]) -> Word:
    parts = []
    for g, e in w.syllables:
        img = images.get(g)
        parts.append(Word.gen(g, e) if img is None else img ** e)
    return Word.product(parts)


def apply_braid(beta: BraidWord, w: Word) -> Word:
    """Image of ``w`` under the Artin automorphism of ``beta``.

    Letters act left to right, so ``apply_braid(b1*b2, w)`` equals
    ``apply_braid(b2, apply_braid(b1, w))``.
    """
    for g in w.generators():
        if g >= beta.num_strands:
            raise IndexError(f"generator {g} outside F_{beta.num_strands}")
    for i, s in beta.letters:
        w = _substitute(w, _sigma_images(i, s))
    return w


@dataclass(frozen=True)
class AbelianizationMap:
    """Homomorphism from a free group onto Z^rank + sum Z/torsion."""

    target_rank: int
    torsion: tuple = ()
    images: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        width = self.target_rank + len(self.torsion)
        imgs = []
        for v in self.images:
            v = tuple(int(x) for x in v)
            if len(v) != width:
                raise ValueError("image vector has wrong length")
            free, tors = v[:self.target_rank], v[self.target_rank:]
            imgs.append(free + tuple(x % m for x, m in zip(tors, self.torsion)))
        object.__setattr__(self, "images", tuple(imgs))

    @property
    def width(self) -> int:
        return self.target_rank + len(self.torsion)

    def image(self, w: Word) -> tuple:
        v = [0] * self.width
        for g, e in w.syllables:
            for k, x in enumerate(self.images[g]):
                v[k] += e * x
        for k, m in enumerate(self.torsion):
            v[self.target_rank + k] %= m
        return tuple(v)

    def kills(self, w: Word) -> bool:
        return not any(self.image(w))

    @classmethod
    def to_integers(cls, degrees: Sequence[int]) -> "AbelianizationMap":
        """The map x_g -> t^{degrees[g]} onto Z."""
        return cls(1, (), tuple((d,) for d in degrees))

    def check(self, p: GroupPresentation) -> None:
        if len(self.images) != p.num_generators:
            raise ValueError("map defined on a different number of generators")
        for r in p.relators:
            if not self.kills(r):
                raise ValueError(f"relator {r.text()} does not map to zero")


def abelianization(p: GroupPresentation) -> AbelianizationMap:
    """Smith-form decomposition of H_1 with explicit generator images."""
    n = p.num_generators
    rows = [r.exponent_sums(n) for r in p.relators]
    diag, _, v = smith_form(rows, n)
    free_idx, tors_idx, tors = [], [], []
    for j in range(n):
        d = diag[j] if j < len(diag) else 0
        if d == 0:
            free_idx.append(j)
        elif d > 1:
            tors_idx.append(j)
            tors.append(d)
    images = []
    for g in range(n):
        row = v[g]
        images.append(tuple(row[j] for j in free_idx) + tuple(row[j] for j in tors_idx))
    return AbelianizationMap(len(free_idx), tuple(tors), tuple(images))


def fox_derivatives(w: Word, phi: AbelianizationMap) -> list[dict]:
    """Fox derivatives of ``w`` pushed into the group ring of phi's target.

    Returns one dict per generator mapping abelian image vectors to integer
    coefficients.
    """
    n = len(phi.images)
    out: list[dict] = [dict() for _ in range(n)]
    prefix = [0] * phi.width
    mods = [None] * phi.target_rank + list(phi.torsion)

    def key(vec):
        return tuple(x if m is None else x % m for x, m in zip(vec, mods))

    def bump(g, k, c):
        d = out[g]
        d[k] = d.get(k, 0) + c
        if d[k] == 0:
            del d[k]

    for g, e in w.syllables:
        img = phi.images[g]
        if e > 0:
            for _ in range(e):
                bump(g, key(prefix), 1)
                prefix = [a + b for a, b in zip(prefix, img)]
        else:
            for _ in range(-e):
                prefix = [a - b for a, b in zip(prefix, img)]
                bump(g, key(prefix), -1)
    return out


def fox_jacobian(p: GroupPresentation, phi: AbelianizationMap | None = None):
    """Matrix of Fox derivatives (rows = relators, columns = generators).

    Entries are LaurentPoly in ``phi.target_rank`` variables.  Torsion
    targets are rejected; evaluate at characters instead.
    """
    from .laurent import LaurentPoly

    phi = abelianization(p) if phi is None else phi
    if phi.torsion:
        raise ValueError("fox_jacobian requires a torsion-free target; "
                         "use depth_at_character for torsion characters")
    phi.check(p)
    k = phi.target_rank
    return [[LaurentPoly(k, d) for d in fox_derivatives(r, phi)] for r in p.relators]


def simplify_presentation(p: GroupPresentation) -> tuple[GroupPresentation, list[Word]]:
    """Restricted Tietze pass.

    Drops trivial relators and eliminates generators defined by relators
    of length <= 2 (``x``, ``x^{+-1} y^{+-1}``).  Returns the new
    presentation and, for each old generator, its image as a word in the
    new generators.
    """
    n = p.num_generators
    images = [Word.gen(i) for i in range(n)]
    rels = [r for r in p.relators if not r.is_identity()]
    alive = list(range(n))
    changed = True
    while changed:
        changed = False
        for r in rels:
            lets = r.letters()
            if len(lets) == 1:
                g, _ = lets[0]
                sub = {g: Word()}
            elif len(lets) == 2 and lets[0][0] != lets[1][0]:
                (g, s), (h, t) = lets
                # x_g^s x_h^t = 1  =>  x_g = x_h^(-t*s)
                sub = {g: Word.gen(h, -t * s)}
            else:
                continue
            rels = [_substitute(q, sub).cyclically_reduced() for q in rels]
            rels = [q for q in rels if not q.is_identity()]
            images = [_substitute(w, sub) for w in images]
            alive.remove(g)
            changed = True
            break
    renum = {old: new for new, old in enumerate(alive)}

    def rn(w: Word) -> Word:
        return Word(tuple((renum[g], e) for g, e in w.syllables))

    labels = None
    if p.generator_labels:
        labels = tuple(p.generator_labels[g] for g in alive)
    seen, uniq = set(), []
    for r in rels:
        r2 = rn(r)
        c = _canonical_relator(r2)
        if c not in seen:
            seen.add(c)
            uniq.append(r2)
    return GroupPresentation(len(alive), tuple(uniq), labels), [rn(w) for w in images]
