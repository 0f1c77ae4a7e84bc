"""The 2-torsion quotient V of the root lattice and its central extension.

V is (F_2)^8 in the reduced simple-root basis.  It carries the quadratic
form q(v) = <v',v'>/2 mod 2 (v' any lift) and the symplectic pairing
induced by the lattice form.  The extension group of order 512 is realized
by the fixed bilinear sign cocycle on the ordered simple basis: strictly
lower-triangular entries are the reduced Gram matrix, diagonal entries the
q-values of the basis vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product

from . import lattice

Bits = tuple[int, ...]


@cache
def gram_mod2() -> tuple[tuple[int, ...], ...]:
    """Gram matrix of the simple system reduced mod 2."""
    s = lattice.SIMPLE_ROOTS
    return tuple(
        tuple(lattice.inner_product(a, b) % 2 for b in s) for a in s
    )


@cache
def _cocycle_matrix() -> tuple[tuple[int, ...], ...]:
    g = gram_mod2()
    rows = []
    for i in range(8):
        row = []
        for j in range(8):
            if i > j:
                row.append(g[i][j])
            elif i == j:
                row.append(1)  # q of a simple root
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


def _check(v) -> Bits:
    v = tuple(int(x) % 2 for x in v)
    if len(v) != 8:
        raise ValueError("two-torsion vectors have 8 bits")
    return v


def reduce_vector(x: lattice.Vec) -> Bits:
    """Image of a root-lattice vector in V."""
    return tuple(c % 2 for c in lattice.simple_coordinates(x))


def all_vectors() -> list[Bits]:
    return [bits for bits in product((0, 1), repeat=8)]


def qform(v) -> int:
    """q(v) = <lift, lift>/2 mod 2, independent of the lift."""
    v = _check(v)
    g = gram_mod2()
    total = sum(v[i] for i in range(8))  # q(b_i) = 1 for each simple root
    total += sum(v[i] * v[j] * g[i][j] for i in range(8) for j in range(i))
    return total % 2


def pairing2(v, w) -> int:
    """The symplectic pairing <.,.>_2, the mod-2 reduction of the form."""
    v, w = _check(v), _check(w)
    g = gram_mod2()
    return sum(v[i] * w[j] * g[i][j] for i in range(8) for j in range(8)) % 2


def gamma_rank() -> int:
    """F_2 rank of the pairing V -> V^dual; 8 exactly when it is bijective."""
    rows = [list(r) for r in gram_mod2()]
    rank = 0
    n = 8
    for c in range(n):
        piv = next((i for i in range(rank, n) if rows[i][c] & 1), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(n):
            if i != rank and rows[i][c] & 1:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _cocycle(v: Bits, w: Bits) -> int:
    """Sign exponent of the bilinear cocycle c(v, w)."""
    m = _cocycle_matrix()
    return sum(v[i] * w[j] * m[i][j] for i in range(8) for j in range(8)) % 2


@dataclass(frozen=True)
class TildeElement:
    """Element (sign, v) of the order-512 extension of V by {+-1}."""

    sign: int
    v: Bits

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")
        object.__setattr__(self, "v", _check(self.v))


IDENTITY = TildeElement(1, (0,) * 8)


def tilde_mul(a: TildeElement, b: TildeElement) -> TildeElement:
    s = a.sign * b.sign * (-1) ** _cocycle(a.v, b.v)
    return TildeElement(s, tuple((x + y) % 2 for x, y in zip(a.v, b.v)))


def tilde_inv(a: TildeElement) -> TildeElement:
    # (s, v)^-1 = (s * (-1)^c(v,v), v); c(v,v) = q(v) for this cocycle.
    return TildeElement(a.sign * (-1) ** qform(a.v), a.v)


def tilde_square_sign(a: TildeElement) -> int:
    return tilde_mul(a, a).sign


def all_elements() -> list[TildeElement]:
    return [TildeElement(s, v) for v in all_vectors() for s in (1, -1)]


def chi_q(a: TildeElement) -> int:
    """The +-1 map whose unit locus picks, for each v, the single lift
    whose sign agrees with (-1)^q(v)."""
    return a.sign * (-1) ** qform(a.v)


def ambient_elements() -> list[tuple[int, Bits]]:
    """The order-1024 extension with centre Z/4 (k, v) ~ i^k central part."""
    return [(k, v) for v in all_vectors() for k in range(4)]


def ambient_mul(a: tuple[int, Bits], b: tuple[int, Bits]) -> tuple[int, Bits]:
    k = (a[0] + b[0] + 2 * _cocycle(a[1], b[1])) % 4
    return (k, tuple((x + y) % 2 for x, y in zip(a[1], b[1])))


def ambient_chi_q(a: tuple[int, Bits]) -> int:
    """The square-times-sign character on the Z/4 extension; its kernel is
    the order-512 group realized by TildeElement."""
    sq = ambient_mul(a, a)
    assert sq[1] == (0,) * 8 and sq[0] in (0, 2)
    square_sign = 1 if sq[0] == 0 else -1
    return square_sign * (-1) ** qform(a[1])
