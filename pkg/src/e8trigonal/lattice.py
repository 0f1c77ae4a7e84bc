"""The rank-9 Picard lattice, its E8 root sublattice, and torus characters.

Vectors are 9-tuples of integers (c_l, c_1, ..., c_8) in the basis
{l, e_1, ..., e_8} with <l,l> = 1, <e_i,e_i> = -1 and mixed products 0.
The canonical class is K = -3l + sum(e_i); the root lattice is its
orthogonal complement, with roots the norm -2 vectors.  Characters live
on the fixed simple system and extend by (bi)linearity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cache

from .dynkin import classify_root_system
from .exact import solve_linear

Vec = tuple[int, ...]

L: Vec = (1, 0, 0, 0, 0, 0, 0, 0, 0)
E: tuple[Vec, ...] = tuple(
    tuple(1 if j == i else 0 for j in range(9)) for i in range(1, 9)
)
K_S: Vec = (-3, 1, 1, 1, 1, 1, 1, 1, 1)


def vec(c_l: int, *cs: int) -> Vec:
    if len(cs) != 8:
        raise ValueError("need 8 exceptional coordinates")
    return (c_l, *cs)


def add(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Vec) -> Vec:
    return tuple(-a for a in x)


def inner_product(x: Vec, y: Vec) -> int:
    """Signature (1,8) pairing of the Picard basis."""
    return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))


def in_root_lattice(x: Vec) -> bool:
    return inner_product(x, K_S) == 0


SIMPLE_ROOTS: tuple[Vec, ...] = tuple(
    [sub(E[i], E[i + 1]) for i in range(7)] + [(1, -1, -1, -1, 0, 0, 0, 0, 0)]
)

# Cartan numbers for the norm -2 convention: 2<a,b>/<b,b> = -<a,b>.
E8_CARTAN = tuple(
    tuple(-inner_product(a, b) for b in SIMPLE_ROOTS) for a in SIMPLE_ROOTS
)


def reflect(x: Vec, alpha: Vec) -> Vec:
    """Reflection in a norm -2 root: s_a(x) = x + <x,a> a."""
    c = inner_product(x, alpha)
    return tuple(xi + c * ai for xi, ai in zip(x, alpha))


@cache
def enumerate_roots() -> tuple[Vec, ...]:
    """All 240 roots, as the reflection closure of the simple system,
    in a fixed sorted order."""
    seen = set(SIMPLE_ROOTS)
    work = list(SIMPLE_ROOTS)
    while work:
        r = work.pop()
        for s in SIMPLE_ROOTS:
            img = reflect(r, s)
            if img not in seen:
                seen.add(img)
                work.append(img)
        m = neg(r)
        if m not in seen:
            seen.add(m)
            work.append(m)
    return tuple(sorted(seen))


@cache
def root_index() -> dict[Vec, int]:
    return {r: i for i, r in enumerate(enumerate_roots())}


def reflect_word(word: list[int], x: Vec) -> Vec:
    """Apply reflections by enumerated-root indices, first index first."""
    roots = enumerate_roots()
    for i in word:
        if not 0 <= i < len(roots):
            raise IndexError(f"root index {i} out of range")
        x = reflect(x, roots[i])
    return x


def simple_root_indices() -> list[int]:
    idx = root_index()
    return [idx[s] for s in SIMPLE_ROOTS]


def dynkin_type(roots) -> str:
    """Dynkin label of a set of Picard-realized roots ('D8', 'E7+A1', ...)."""
    return classify_root_system(list(roots), inner_product)


def simple_coordinates(v: Vec) -> list[int]:
    """Integer coordinates of a root-lattice vector in the simple basis."""
    if not in_root_lattice(v):
        raise ValueError("vector is not orthogonal to the canonical class")
    rows = [[Q(SIMPLE_ROOTS[j][i]) for j in range(8)] for i in range(9)]
    sol = solve_linear(rows, [Q(c) for c in v])
    if sol is None:
        raise ValueError("vector is not in the root lattice")
    coords = []
    for c in sol:
        if c.denominator != 1:
            raise ValueError("vector is not in the root lattice")
        coords.append(int(c))
    return coords


@dataclass(frozen=True)
class Character:
    """A point of T = Hom(lattice, Gm) ('mult') or of its Lie algebra
    Hom(lattice, Ga) ('add'), stored by its values on the simple system."""

    mode: str
    values: tuple[Q, ...]

    def __post_init__(self):
        if self.mode not in ("mult", "add"):
            raise ValueError("mode must be 'mult' or 'add'")
        vals = tuple(Q(v) for v in self.values)
        if len(vals) != 8:
            raise ValueError("a character needs 8 simple-root values")
        if self.mode == "mult" and any(v == 0 for v in vals):
            raise ValueError("multiplicative character values must be nonzero")
        object.__setattr__(self, "values", vals)

    def scale(self, c) -> "Character":
        c = Q(c)
        if self.mode != "add":
            raise ValueError("only additive characters scale")
        return Character("add", tuple(v * c for v in self.values))


def eval_character(chi: Character, v: Vec) -> Q:
    """Extend the simple-root values to v by the homomorphism property."""
    coords = simple_coordinates(v)
    if chi.mode == "mult":
        out = Q(1)
        for c, val in zip(coords, chi.values):
            if c:
                out *= val ** c
        return out
    return sum((c * val for c, val in zip(coords, chi.values)), Q(0))


def is_regular_semisimple(chi: Character) -> bool:
    """True iff the character avoids every root hyperplane."""
    bad = Q(1) if chi.mode == "mult" else Q(0)
    return all(eval_character(chi, a) != bad for a in enumerate_roots())


def discriminant(chi: Character) -> Q:
    """Product of (value - 1) over all roots (multiplicative case) or of
    the values themselves (additive case); zero exactly off T^rss."""
    out = Q(1)
    if chi.mode == "mult":
        for a in enumerate_roots():
            out *= eval_character(chi, a) - 1
    else:
        for a in enumerate_roots():
            out *= eval_character(chi, a)
    return out


def root_value_multiset(chi: Character) -> tuple[Q, ...]:
    """The 240 root values as a sorted tuple (a Weyl-orbit invariant)."""
    return tuple(sorted(eval_character(chi, a) for a in enumerate_roots()))


def character_reflect(chi: Character, word: list[int]) -> Character:
    """Precompose a character with the inverse of a reflection word."""
    inv = list(reversed(word))
    vals = tuple(eval_character(chi, reflect_word(inv, b)) for b in SIMPLE_ROOTS)
    return Character(chi.mode, vals)
