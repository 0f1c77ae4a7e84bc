"""Affine Weyl machinery on the fundamental alcove for simply laced types.

Points live in the coweight basis, so the i-th coordinate of x is the
value of the i-th simple root on x and the highest root evaluates as the
mark-weighted coordinate sum.  The closed alcove is cut out by x_i >= 0
and that weighted sum <= 1.  The alcove-stabilizer group is built by
normalizing minuscule-coweight translates of the barycentre.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cache

from .dynkin import classify_root_system
from .exact import smith_invariant_factors

Point = tuple[Q, ...]


def _edges(label: str, rank: int) -> list[tuple[int, int]]:
    if label == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if label == "D":
        if rank < 3:
            raise ValueError("D needs rank >= 3")
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    if label == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E needs rank 6, 7 or 8")
        chain = [1, 3, 4, 5, 6, 7, 8][: rank - 1]
        return [(a, b) for a, b in zip(chain, chain[1:])] + [(2, 4)]
    raise ValueError(f"unsupported type {label}{rank}")


@dataclass(frozen=True)
class RootDatum:
    """Simply laced root datum in Bourbaki numbering."""

    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[tuple[int, ...], ...]  # integer coords in the simple basis
    highest: tuple[int, ...]  # marks a_1..a_l of the highest root

    @property
    def name(self) -> str:
        return f"{self.label}{self.rank}"

    def root_pairing(self, c, d) -> int:
        return sum(
            c[i] * self.cartan[i][j] * d[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    # -- evaluation in coweight coordinates --

    def highest_value(self, x: Point) -> Q:
        return sum((a * xi for a, xi in zip(self.highest, x)), Q(0))

    def in_closed_alcove(self, x: Point) -> bool:
        return all(xi >= 0 for xi in x) and self.highest_value(x) <= 1

    def vertices(self) -> list[Point]:
        out = [tuple(Q(0) for _ in range(self.rank))]
        for i, a in enumerate(self.highest):
            v = [Q(0)] * self.rank
            v[i] = Q(1, a)
            out.append(tuple(v))
        return out

    def barycentre(self) -> Point:
        vs = self.vertices()
        n = len(vs)
        return tuple(sum((v[i] for v in vs), Q(0)) / n for i in range(self.rank))


def parse_type(name: str) -> tuple[str, int]:
    name = name.strip().upper()
    if len(name) < 2 or name[0] not in "ADE":
        raise ValueError(f"unsupported type {name!r}")
    return name[0], int(name[1:])


@cache
def build_root_datum(name: str) -> RootDatum:
    """Root datum for A_n, D_n (n>=4), E6, E7 or E8."""
    label, rank = parse_type(name)
    if label == "A" and rank < 1:
        raise ValueError("A needs rank >= 1")
    if label == "D" and rank < 4:
        raise ValueError("D needs rank >= 4")
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if not (label == "A" and rank == 1):
        for a, b in _edges(label, rank):
            cartan[a - 1][b - 1] = cartan[b - 1][a - 1] = -1
    cartan_t = tuple(tuple(row) for row in cartan)
    roots = _enumerate_roots(cartan_t, rank)
    highest = max(roots, key=lambda c: sum(c))
    total = sum(highest)
    assert all(sum(r) < total or r == highest for r in roots)
    return RootDatum(label, rank, cartan_t, roots, highest)


def _enumerate_roots(cartan, rank) -> tuple[tuple[int, ...], ...]:
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simples)
    work = list(simples)
    while work:
        c = work.pop()
        for i in range(rank):
            pairing = sum(cartan[i][j] * c[j] for j in range(rank))
            img = tuple(
                cj - pairing * (1 if j == i else 0) for j, cj in enumerate(c)
            )
            if img not in seen:
                seen.add(img)
                work.append(img)
        m = tuple(-x for x in c)
        if m not in seen:
            seen.add(m)
            work.append(m)
    return tuple(sorted(seen))


# -- affine reflections in coweight coordinates --


def _coroot_coords(datum: RootDatum, i: int) -> tuple[int, ...]:
    # coordinates of the i-th simple coroot in the coweight basis
    return tuple(datum.cartan[i][j] for j in range(datum.rank))


def _highest_coroot_coords(datum: RootDatum) -> tuple[int, ...]:
    return tuple(
        sum(a * datum.cartan[i][j] for i, a in enumerate(datum.highest))
        for j in range(datum.rank)
    )


def apply_reflection(datum: RootDatum, i: int, x: Point) -> Point:
    """Affine simple reflection: i in 1..rank is s_i, i = 0 reflects in
    the wall where the highest root equals 1."""
    x = tuple(Q(v) for v in x)
    if i == 0:
        c = datum.highest_value(x) - 1
        co = _highest_coroot_coords(datum)
    else:
        c = x[i - 1]
        co = _coroot_coords(datum, i - 1)
    return tuple(xj - c * cj for xj, cj in zip(x, co))


def apply_word(datum: RootDatum, word: list[int], x: Point) -> Point:
    for i in word:
        x = apply_reflection(datum, i, x)
    return x


def normalize_to_alcove(datum: RootDatum, x) -> tuple[Point, list[int]]:
    """Map x into the closed alcove by affine simple reflections.

    Returns the normalized point and the word (applied first-to-last)
    that realizes it; the word reflects only in the walls of the alcove.
    """
    x = tuple(Q(v) for v in x)
    if len(x) != datum.rank:
        raise ValueError("point has wrong dimension")
    word: list[int] = []
    while True:
        neg = next((i for i, v in enumerate(x) if v < 0), None)
        if neg is not None:
            x = apply_reflection(datum, neg + 1, x)
            word.append(neg + 1)
            continue
        if datum.highest_value(x) > 1:
            x = apply_reflection(datum, 0, x)
            word.append(0)
            continue
        return x, word


def fundamental_group(datum: RootDatum) -> list[int]:
    """Cyclic orders of the coweight-by-coroot quotient via Smith form."""
    return smith_invariant_factors(datum.cartan)


def fundamental_group_order(datum: RootDatum) -> int:
    order = 1
    for d in fundamental_group(datum):
        order *= d
    return order


@dataclass(frozen=True)
class OmegaElement:
    """Extended-affine element w . t_y preserving the closed alcove,
    acting as x -> w(x + y)."""

    matrix: tuple[tuple[Q, ...], ...]
    translation: tuple[int, ...]
    weyl_word: tuple[int, ...]

    def apply(self, x) -> Point:
        x = tuple(Q(v) + t for v, t in zip(x, self.translation))
        return tuple(
            sum((row[j] * x[j] for j in range(len(x))), Q(0)) for row in self.matrix
        )

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(x == 0 for x in self.translation) and all(
            self.matrix[i][j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(n)
        )


def _reflection_matrix(datum: RootDatum, i: int) -> list[list[Q]]:
    n = datum.rank
    co = _coroot_coords(datum, i - 1)
    m = [[Q(1) if a == b else Q(0) for b in range(n)] for a in range(n)]
    for j in range(n):
        m[j][i - 1] -= co[j]
    return m


def _affine_of_word(datum: RootDatum, word: list[int]):
    """(matrix, vector) of the affine map sending x to word applied to x."""
    n = datum.rank
    mat = [[Q(1) if a == b else Q(0) for b in range(n)] for a in range(n)]
    vec = [Q(0)] * n

    def compose(refl_mat, refl_vec):
        nonlocal mat, vec
        mat = [
            [
                sum(refl_mat[a][k] * mat[k][b] for k in range(n))
                for b in range(n)
            ]
            for a in range(n)
        ]
        vec = [
            sum(refl_mat[a][k] * vec[k] for k in range(n)) + refl_vec[a]
            for a in range(n)
        ]

    for i in word:
        if i == 0:
            co = _highest_coroot_coords(datum)
            rm = [[Q(1) if a == b else Q(0) for b in range(n)] for a in range(n)]
            for j in range(n):
                for k in range(n):
                    rm[j][k] -= co[j] * datum.highest[k]
            compose(rm, [Q(c) for c in co])
        else:
            compose(_reflection_matrix(datum, i), [Q(0)] * n)
    return mat, vec


def weyl_word_of_matrix(datum: RootDatum, mat) -> tuple[int, ...]:
    """A simple-reflection word for a finite Weyl element given by its
    matrix in coweight coordinates."""
    n = datum.rank
    x0 = tuple(Q(1) for _ in range(n))
    y = tuple(sum((mat[a][b] * x0[b] for b in range(n)), Q(0)) for a in range(n))
    word: list[int] = []
    while True:
        neg = next((i for i, v in enumerate(y) if v < 0), None)
        if neg is None:
            break
        y = apply_reflection(datum, neg + 1, y)
        word.append(neg + 1)
    if y != x0:
        raise ValueError("matrix is not a Weyl element")
    return tuple(reversed(word))


def omega_elements(datum: RootDatum) -> list[OmegaElement]:
    """One alcove-preserving element per fundamental-group member."""
    n = datum.rank
    ident = OmegaElement(
        tuple(tuple(Q(1) if a == b else Q(0) for b in range(n)) for a in range(n)),
        (0,) * n,
        (),
    )
    out = [ident]
    b = datum.barycentre()
    for i, a in enumerate(datum.highest):
        if a != 1:
            continue
        shifted = tuple(v + (1 if j == i else 0) for j, v in enumerate(b))
        back, word = normalize_to_alcove(datum, shifted)
        if back != b:
            raise AssertionError("barycentre translate failed to normalize")
        mat, vec = _affine_of_word(datum, word)
        # total map g = (mat, vec) . t_{omega_i}: x -> mat(x + e_i) + vec
        trans_vec = [
            vec[a2] + (mat[a2][i]) for a2 in range(n)
        ]
        # write g = w . t_y with w = mat, y = mat^{-1} trans_vec
        y = _solve_matrix(mat, trans_vec)
        if any(v.denominator != 1 for v in y):
            raise AssertionError("translation part is not a coweight")
        g = OmegaElement(
            tuple(tuple(row) for row in mat),
            tuple(int(v) for v in y),
            weyl_word_of_matrix(datum, mat),
        )
        _check_alcove_permutation(datum, g)
        out.append(g)
    if len(out) != fundamental_group_order(datum):
        raise AssertionError("alcove stabilizer has unexpected size")
    return out


def _solve_matrix(mat, rhs):
    from .exact import solve_linear

    n = len(rhs)
    sol = solve_linear([list(row) for row in mat], list(rhs))
    if sol is None:
        raise AssertionError("singular Weyl matrix")
    return sol


def _check_alcove_permutation(datum: RootDatum, g: OmegaElement) -> None:
    vs = datum.vertices()
    imgs = [g.apply(v) for v in vs]
    if sorted(imgs) != sorted(vs):
        raise AssertionError("element does not preserve the alcove")


def omega_apply(g: OmegaElement, x) -> Point:
    return g.apply(x)


def element_order(g: OmegaElement, datum: RootDatum) -> int:
    b = datum.barycentre()
    probe = tuple(v + Q(1, 1000 + 7 * i) for i, v in enumerate(b))
    probe, _ = normalize_to_alcove(datum, probe)
    cur = g.apply(probe)
    n = 1
    while cur != probe:
        cur = g.apply(cur)
        n += 1
        if n > 10000:
            raise AssertionError("runaway order computation")
    return n


def stabilizer(datum: RootDatum, x) -> list[OmegaElement]:
    """Subgroup of the alcove stabilizer fixing x (exact evaluation)."""
    x = tuple(Q(v) for v in x)
    if not datum.in_closed_alcove(x):
        raise ValueError("point is outside the closed alcove")
    return [g for g in omega_elements(datum) if g.apply(x) == x]


def component_group_of_element(datum: RootDatum, x) -> list[OmegaElement]:
    """Component group of the centralizer of exp(x): the stabilizer of x
    in the alcove-preserving group."""
    return stabilizer(datum, x)


@dataclass(frozen=True)
class KacClass:
    """Torsion class of order dividing m in Kac coordinates."""

    s: tuple[int, ...]  # (s_0, s_1, ..., s_l)
    m: int
    point: Point

    @property
    def is_identity(self) -> bool:
        return all(x == 0 for x in self.s[1:])


def kac_classes(datum: RootDatum, m: int, exact_order: bool = False) -> list[KacClass]:
    """Kac coordinate vectors (s_0,...,s_l) of nonnegative integers with
    s_0 + sum a_i s_i = m, as alcove points x = sum (s_i/m) v_i, one per
    orbit of the alcove-stabilizer group.

    These enumerate conjugacy classes of elements of order dividing m;
    exact_order=True keeps only gcd-1 vectors (order exactly m).
    """
    if m < 1:
        raise ValueError("m must be positive")
    raw: list[KacClass] = []

    def rec(i: int, left: int, acc: list[int]):
        if i == datum.rank:
            s = tuple([left] + acc)
            if exact_order:
                from math import gcd

                g = 0
                for v in s:
                    g = gcd(g, v)
                if g != 1:
                    return
            point = tuple(Q(si, m) for si in acc)
            raw.append(KacClass(s, m, point))
            return
        a = datum.highest[i]
        k = 0
        while a * k <= left:
            rec(i + 1, left - a * k, acc + [k])
            k += 1

    rec(0, m, [])
    # identify solutions in the same orbit of the alcove-stabilizer group
    omega = omega_elements(datum)
    by_point = {kc.point: kc for kc in raw}
    seen: set = set()
    out: list[KacClass] = []
    for kc in sorted(raw, key=lambda kc: kc.s, reverse=True):
        if kc.point in seen:
            continue
        orbit = {g.apply(kc.point) for g in omega}
        if not orbit <= set(by_point):
            raise AssertionError("alcove stabilizer left the Kac grid")
        seen |= orbit
        out.append(kc)
    return out


def fixed_subsystem(datum: RootDatum, x) -> list[tuple[int, ...]]:
    """Roots taking integer values at x (the centralizer's root system)."""
    x = tuple(Q(v) for v in x)
    out = []
    for c in datum.roots:
        val = sum((ci * xi for ci, xi in zip(c, x)), Q(0))
        if val.denominator == 1:
            out.append(c)
    return out


def fixed_subsystem_type(datum: RootDatum, x) -> str:
    """Dynkin label of the fixed subsystem at x ('-' if it is empty)."""
    roots = fixed_subsystem(datum, x)
    if not roots:
        return "-"
    return classify_root_system(
        [tuple(Q(c) for c in r) for r in roots],
        lambda a, b: Q(datum.root_pairing([int(v) for v in a], [int(v) for v in b])),
    )
