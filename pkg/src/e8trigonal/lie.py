"""A split e8 over Q in a Chevalley basis with cocycle signs.

The 248-dimensional algebra is the span of 8 simple coroots and 240 root
vectors indexed by the standard positive-definite realization in R^8
(integer or half-integer coordinates, stored doubled for exactness).  All
root-space signs come from one bilinear +-1 cocycle on the simple basis:
[x_a, x_b] = eps(a,b) x_{a+b} when a+b is a root and eps(a,-a) times the
coroot of a when b = -a.  The distinguished involution fixes the Cartan
and the integer-coordinate root spaces and negates the rest; its fixed
subalgebra has root system of type D8.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cache
from itertools import combinations

from . import lattice
from .alcove import build_root_datum
from .dynkin import classify_root_system, simple_system
from .exact import mat_rref

# Doubled Bourbaki coordinates of the simple roots (Planche VII order).
_SIMPLE2 = (
    (1, -1, -1, -1, -1, -1, -1, 1),
    (2, 2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
)


def _dot2(a, b) -> int:
    """Pairing of doubled coordinate vectors: 4 times the real pairing."""
    return sum(x * y for x, y in zip(a, b))


def dot(a, b) -> Q:
    return Q(_dot2(a, b), 4)


@cache
def bourbaki_roots() -> tuple[tuple[int, ...], ...]:
    """The 240 roots in doubled coordinates, sorted."""
    roots = set()
    for i, j in combinations(range(8), 2):
        for si in (2, -2):
            for sj in (2, -2):
                v = [0] * 8
                v[i], v[j] = si, sj
                roots.add(tuple(v))
    for mask in range(256):
        v = tuple(-1 if (mask >> k) & 1 else 1 for k in range(8))
        if sum(1 for x in v if x < 0) % 2 == 0:
            roots.add(v)
    out = tuple(sorted(roots))
    assert len(out) == 240
    return out


def is_integral(root2) -> bool:
    """True when the undoubled coordinates are integers."""
    return all(c % 2 == 0 for c in root2)


@cache
def _structure() -> dict:
    datum = build_root_datum("E8")
    roots2 = bourbaki_roots()
    index = {r: i for i, r in enumerate(roots2)}
    # simple coordinates: map the alcove datum's simple-basis roots onto
    # doubled coordinates and match them up.
    coord_of = {}
    for c in datum.roots:
        v = tuple(
            sum(ci * s[k] for ci, s in zip(c, _SIMPLE2)) for k in range(8)
        )
        coord_of[v] = c
    assert set(coord_of) == set(roots2)
    simple_coords = tuple(coord_of[r] for r in roots2)
    cartan = datum.cartan

    def eps_exp(m, n) -> int:
        total = sum(m[i] * n[i] for i in range(8))
        for i in range(8):
            if m[i]:
                row = cartan[i]
                total += sum(m[i] * n[j] * row[j] for j in range(i))
        return total % 2

    return {
        "roots2": roots2,
        "index": index,
        "simple_coords": simple_coords,
        "cartan": cartan,
        "eps_exp": eps_exp,
    }


def eps(i: int, j: int) -> int:
    """Cocycle sign between the i-th and j-th enumerated roots."""
    st = _structure()
    m = st["simple_coords"][i]
    n = st["simple_coords"][j]
    return -1 if st["eps_exp"](m, n) else 1


DIM = 248


@cache
def bracket_table() -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
    """Brackets of basis pairs: (i, j) -> ((k, coeff), ...) for i < j.

    Indices 0..7 are the simple coroots h_i, 8..247 the root vectors in
    enumeration order.  Coefficients are integers.
    """
    st = _structure()
    roots2 = st["roots2"]
    index = st["index"]
    simple_coords = st["simple_coords"]
    table: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
    for a in range(8):
        sa = _SIMPLE2[a]
        for r, root in enumerate(roots2):
            c = _dot2(root, sa) // 4
            if c:
                table[(a, 8 + r)] = ((8 + r, c),)
    for r in range(240):
        for s in range(r + 1, 240):
            ra, rb = roots2[r], roots2[s]
            total = tuple(x + y for x, y in zip(ra, rb))
            if all(x == 0 for x in total):
                sign = eps(r, s)
                coroot = simple_coords[r]
                entry = tuple(
                    (i, sign * ci) for i, ci in enumerate(coroot) if ci
                )
                table[(8 + r, 8 + s)] = entry
            elif total in index:
                sign = eps(r, s)
                table[(8 + r, 8 + s)] = ((8 + index[total], sign),)
    return table


def bracket_basis(i: int, j: int) -> tuple[tuple[int, int], ...]:
    if i == j:
        return ()
    if i < j:
        return bracket_table().get((i, j), ())
    return tuple((k, -c) for k, c in bracket_table().get((j, i), ()))


@dataclass(frozen=True)
class LieElement:
    """Sparse element: mapping from basis index to rational coordinate."""

    coords: tuple[tuple[int, Q], ...]

    @classmethod
    def from_dict(cls, d: dict[int, Q]) -> "LieElement":
        items = tuple(sorted((i, Q(c)) for i, c in d.items() if c != 0))
        return cls(items)

    def to_dict(self) -> dict[int, Q]:
        return dict(self.coords)

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "LieElement") -> "LieElement":
        d = self.to_dict()
        for i, c in other.coords:
            d[i] = d.get(i, Q(0)) + c
        return LieElement.from_dict(d)

    def scale(self, c) -> "LieElement":
        c = Q(c)
        return LieElement.from_dict({i: v * c for i, v in self.coords})


def cartan_element(coeffs) -> LieElement:
    """Element of the Cartan subalgebra in the simple-coroot basis."""
    coeffs = list(coeffs)
    if len(coeffs) != 8:
        raise ValueError("need 8 coroot coordinates")
    return LieElement.from_dict({i: Q(c) for i, c in enumerate(coeffs)})


def root_vector(r: int) -> LieElement:
    if not 0 <= r < 240:
        raise IndexError("root index out of range")
    return LieElement.from_dict({8 + r: Q(1)})


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """The Lie bracket, bilinear over the basis table."""
    acc: dict[int, Q] = {}
    for i, ci in x.coords:
        for j, cj in y.coords:
            f = ci * cj
            for k, c in bracket_basis(i, j):
                acc[k] = acc.get(k, Q(0)) + f * c
    return LieElement.from_dict(acc)


def root_value(r: int, cartan_coeffs) -> Q:
    """Value of the r-th root on a Cartan element in coroot coordinates."""
    st = _structure()
    root = st["roots2"][r]
    return sum(
        (Q(c) * Q(_dot2(root, _SIMPLE2[i]), 4) for i, c in enumerate(cartan_coeffs)),
        Q(0),
    )


def jacobi_check(mode: str = "full", seed: int = 0, samples: int = 20000) -> dict:
    """Verify the Jacobi identity over basis triples.

    mode='full' scans all C(248,3) unordered triples using the sparse
    bracket table; mode='sampled' checks a seeded random subset.  Raises
    AssertionError naming the first violating triple.
    """
    table = bracket_basis
    n = DIM

    def jacobi_triple(i, j, k) -> bool:
        acc: dict[int, int | Q] = {}
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            for m, coeff in table(b, c):
                for p, coeff2 in table(a, m):
                    key = p
                    acc[key] = acc.get(key, 0) + coeff * coeff2
        return all(v == 0 for v in acc.values())

    checked = 0
    if mode == "full":
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    checked += 1
                    if not jacobi_triple(i, j, k):
                        raise AssertionError(f"Jacobi fails on triple ({i},{j},{k})")
    elif mode == "sampled":
        import random

        rng = random.Random(seed)
        for _ in range(samples):
            i, j, k = rng.sample(range(n), 3)
            checked += 1
            if not jacobi_triple(i, j, k):
                raise AssertionError(f"Jacobi fails on triple ({i},{j},{k})")
    else:
        raise ValueError("mode must be 'full' or 'sampled'")
    return {"mode": mode, "triples_checked": checked, "violations": 0}


# ---- the involution ----


@cache
def theta_signs() -> tuple[int, ...]:
    signs = [1] * 8
    for r in bourbaki_roots():
        signs.append(1 if is_integral(r) else -1)
    return tuple(signs)


def theta_map(x: LieElement) -> LieElement:
    """The involution fixing the Cartan and integer-coordinate root
    spaces; an automorphism of trace -8."""
    signs = theta_signs()
    return LieElement.from_dict({i: c * signs[i] for i, c in x.coords})


def theta_trace() -> int:
    return sum(theta_signs())


def theta_eigenspace_dims() -> tuple[int, int]:
    signs = theta_signs()
    plus = sum(1 for s in signs if s == 1)
    return plus, DIM - plus


def theta_is_automorphism() -> bool:
    """Check theta[x,y] = [theta x, theta y] on every basis pair."""
    signs = theta_signs()
    for i in range(DIM):
        for j in range(i + 1, DIM):
            f = signs[i] * signs[j]
            for k, c in bracket_basis(i, j):
                if signs[k] * c != f * c:
                    return False
    return True


def fixed_subalgebra_type() -> str:
    """Dynkin type of the root system of the +1 eigenspace."""
    fixed = [r for r in bourbaki_roots() if is_integral(r)]
    return classify_root_system(
        [tuple(Q(c) for c in r) for r in fixed],
        lambda a, b: sum(x * y for x, y in zip(a, b)),
    )


def centralizer_dim(x: LieElement) -> int:
    """dim ker(ad x) via the exact rank of the 248 x 248 bracket matrix."""
    cols = []
    for j in range(DIM):
        col: dict[int, Q] = {}
        for i, ci in x.coords:
            for k, c in bracket_basis(i, j):
                col[k] = col.get(k, Q(0)) + ci * c
        cols.append(col)
    rows = [[cols[j].get(k, Q(0)) for j in range(DIM)] for k in range(DIM)]
    _, pivots = mat_rref(rows)
    return DIM - len(pivots)


# ---- realization isometry onto the Picard lattice ----


@cache
def realization_isometry():
    """Linear map phi from the standard realization onto the Picard root
    lattice with <phi x, phi y> = -(x . y), matching the integral D8 onto
    the even-pairing-with-l D8 and carrying roots onto roots.

    Returns (columns, apply) where columns[i] is the image of the i-th
    standard basis vector (undoubled) as a rational 9-vector.
    """
    dblroots = bourbaki_roots()
    integral = [tuple(Q(c, 2) for c in r) for r in dblroots if is_integral(r)]
    sb = simple_system(integral, lambda a, b: sum(x * y for x, y in zip(a, b)))
    picard = lattice.enumerate_roots()
    even = [tuple(Q(c) for c in r) for r in picard if r[0] % 2 == 0]
    sp = simple_system(even, lambda a, b: -_pic_pair(a, b))
    for flip in (False, True):
        cols = _match_d8(sb, sp, flip)
        if cols is None:
            continue
        ok = True
        for s2 in _SIMPLE2:
            img = _apply_cols(cols, tuple(Q(c, 2) for c in s2))
            if any(v.denominator != 1 for v in img):
                ok = False
                break
            if tuple(int(v) for v in img) not in set(picard):
                ok = False
                break
        if ok:
            def apply(vec):
                return _apply_cols(cols, tuple(Q(v) for v in vec))

            return cols, apply
    raise AssertionError("no isometry matched the two D8 subsystems")


def additive_character_of_cartan(coeffs) -> "lattice.Character":
    """Additive character on the Picard root lattice matching evaluation
    against a Cartan element (given in simple-coroot coordinates),
    transported through the realization isometry."""
    from .exact import solve_linear

    cols, _ = realization_isometry()
    coeffs = [Q(c) for c in coeffs]
    values = []
    for p in lattice.SIMPLE_ROOTS:
        rows = [[cols[i][k] for i in range(8)] for k in range(9)]
        pre = solve_linear(rows, [Q(c) for c in p])
        if pre is None:
            raise AssertionError("isometry failed to invert a simple root")
        # evaluate the preimage root on the Cartan element
        val = Q(0)
        for j, cj in enumerate(coeffs):
            if cj:
                aj = tuple(Q(c, 2) for c in _SIMPLE2[j])
                val += cj * sum(x * y for x, y in zip(pre, aj))
        values.append(val)
    return lattice.Character("add", tuple(values))


def cartan_of_additive_character(chi: "lattice.Character") -> LieElement:
    """Cartan element (simple-coroot coordinates) whose root values match
    an additive character under the realization isometry."""
    from .exact import solve_linear

    if chi.mode != "add":
        raise ValueError("need an additive character")
    _, phi = realization_isometry()
    st = _structure()
    targets = []
    for s2 in _SIMPLE2:
        img = phi(tuple(Q(c, 2) for c in s2))
        targets.append(lattice.eval_character(chi, tuple(int(v) for v in img)))
    rows = [[Q(st["cartan"][i][j]) for j in range(8)] for i in range(8)]
    sol = solve_linear(rows, targets)
    if sol is None:
        raise AssertionError("Cartan matrix failed to invert")
    return cartan_element(sol)


def _pic_pair(a, b) -> Q:
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def _apply_cols(cols, vec):
    return tuple(
        sum((vec[i] * cols[i][k] for i in range(8)), Q(0)) for k in range(9)
    )


def _d8_arms(simples, pair):
    n = len(simples)
    adj = {i: [j for j in range(n) if j != i and pair(simples[i], simples[j]) != 0]
           for i in range(n)}
    branch = next(i for i in range(n) if len(adj[i]) == 3)
    arms = []
    for nbr in adj[branch]:
        arm = [nbr]
        prev, cur = branch, nbr
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=len)
    return branch, arms


def _match_d8(sb, sp, flip):
    """Order both D8 simple systems compatibly and solve for the matrix."""
    bpair = lambda a, b: sum(x * y for x, y in zip(a, b))
    ppair = lambda a, b: -_pic_pair(a, b)
    b_branch, b_arms = _d8_arms(sb, bpair)
    p_branch, p_arms = _d8_arms(sp, ppair)
    if [len(a) for a in b_arms] != [1, 1, 5] or [len(a) for a in p_arms] != [1, 1, 5]:
        raise AssertionError("unexpected D8 diagram shape")
    if flip:
        p_arms = [p_arms[1], p_arms[0], p_arms[2]]
    order_b = [b_branch] + b_arms[0] + b_arms[1] + b_arms[2]
    order_p = [p_branch] + p_arms[0] + p_arms[1] + p_arms[2]
    src = [sb[i] for i in order_b]
    dst = [sp[i] for i in order_p]
    # phi(src_m) = dst_m determines the 9x8 matrix; solve row by row.
    from .exact import solve_linear

    mat_rows = [[src[m][k] for k in range(8)] for m in range(8)]
    cols_out = []
    for coord in range(9):
        rhs = [Q(dst[m][coord]) for m in range(8)]
        sol = solve_linear(mat_rows, rhs)
        if sol is None:
            return None
        cols_out.append(sol)
    # cols_out[coord][i] = entry (coord, i); repackage as columns.
    return [tuple(cols_out[coord][i] for coord in range(9)) for i in range(8)]
