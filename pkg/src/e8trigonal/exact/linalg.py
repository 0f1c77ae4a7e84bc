"""Exact rational linear algebra: echelon forms, kernels, ranks.

Matrices are lists of rows; rows are lists of Fractions (or ints, which
are promoted).  Everything is pure and side-effect free; inputs are never
mutated.  Kernel computations use a fraction-free integer forward pass
(Bareiss discipline) to bound coefficient blowup on the large systems
that arise downstream, with rational back-substitution only on the small
triangular tail.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd, lcm
from typing import Sequence

Row = Sequence[Q]

# Mersenne primes small enough for numpy int64 products; used only to
# *certify* full rank (a modular rank is always a lower bound).
_CERT_PRIMES = (2147483647, 2147483629)


def _as_int_rows(rows: Sequence[Row]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; rank/kernel unchanged."""
    out = []
    for row in rows:
        row = [Q(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def _primitive_int(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g == 0:
        return list(row)
    lead = next((x for x in row if x != 0), 1)
    if lead < 0:
        g = -g
    return [x // g for x in row]


def primitive_vector(vec: Sequence[Q]) -> list[Q]:
    """Scale a rational vector to primitive integers, first nonzero positive."""
    vec = [Q(x) for x in vec]
    if all(x == 0 for x in vec):
        return vec
    scale = lcm(*(x.denominator for x in vec))
    ints = _primitive_int([int(x * scale) for x in vec])
    return [Q(x) for x in ints]


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.  Returns (echelon rows, pivot columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            if all(x == 0 for x in m[i][c:]):
                continue
            mi, mr = m[i], m[r]
            a, b = mr[c], mi[c]
            for j in range(c, ncols):
                mi[j] = (a * mi[j] - b * mr[j]) // prev
        prev = m[r][c]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def mat_rank(rows: Sequence[Row]) -> int:
    """Exact rank over Q."""
    if not rows or not rows[0]:
        return 0
    _, pivots = _bareiss_echelon(_as_int_rows(rows))
    return len(pivots)


def _rank_mod_p(int_rows: list[list[int]], p: int) -> int:
    import numpy as np

    a = np.array([[x % p for x in row] for row in int_rows], dtype=np.int64)
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[r + 1:, c].copy()
        if col.any():
            a[r + 1:] = (a[r + 1:] - col[:, None] * a[r][None, :]) % p
        r += 1
    return r


def mat_rank_certified(rows: Sequence[Row]) -> int:
    """Exact rank, using a fast modular certificate when the matrix has
    full rank (the common case for the interpolation systems here)."""
    if not rows or not rows[0]:
        return 0
    int_rows = _as_int_rows(rows)
    full = min(len(int_rows), len(int_rows[0]))
    for p in _CERT_PRIMES:
        if _rank_mod_p(int_rows, p) == full:
            return full
    _, pivots = _bareiss_echelon(int_rows)
    return len(pivots)


def mat_kernel(rows: Sequence[Row], ncols: int | None = None) -> list[list[Q]]:
    """Basis of the right kernel of a rational matrix.

    Returned vectors are primitive integer vectors (as Fractions), one per
    free column, linearly independent; the count is ncols - rank.  An empty
    matrix has the full column space as kernel, so the standard basis is
    returned when ncols is supplied.
    """
    if not rows:
        if ncols is None:
            return []
        return [[Q(1) if j == i else Q(0) for j in range(ncols)] for i in range(ncols)]
    width = len(rows[0])
    if ncols is not None and ncols != width:
        raise ValueError("ncols disagrees with row width")
    if any(len(r) != width for r in rows):
        raise ValueError("ragged matrix")
    ech, pivots = _bareiss_echelon(_as_int_rows(rows))
    pivset = set(pivots)
    free = [c for c in range(width) if c not in pivset]
    basis: list[list[Q]] = []
    for f in free:
        vec = [Q(0)] * width
        vec[f] = Q(1)
        # Back-substitute through the integer echelon rows.
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            row = ech[i]
            s = sum((Q(row[j]) * vec[j] for j in range(c + 1, width) if vec[j] != 0), Q(0))
            vec[c] = -s / row[c]
        basis.append(primitive_vector(vec))
    return basis


def mat_rref(rows: Sequence[Row]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form over Q with its pivot columns."""
    m = [[Q(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def solve_linear(rows: Sequence[Row], rhs: Sequence[Q]) -> list[Q] | None:
    """One solution of A x = b over Q, or None if inconsistent."""
    aug = [list(r) + [Q(b)] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    rref, pivots = mat_rref(aug)
    if ncols in pivots:
        return None
    x = [Q(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rref[i][-1]
    return x


def smith_invariant_factors(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nontrivial invariant factors (>1) of an integer matrix."""
    m = [[int(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    factors: list[int] = []
    r = c = 0
    while r < nrows and c < ncols:
        piv = None
        best = None
        for i in range(r, nrows):
            for j in range(c, ncols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, piv = v, (i, j)
        if piv is None:
            break
        i, j = piv
        m[r], m[i] = m[i], m[r]
        for row in m:
            row[c], row[j] = row[j], row[c]
        while True:
            done = True
            for i in range(r + 1, nrows):
                if m[i][c] % m[r][c]:
                    done = False
                q = m[i][c] // m[r][c]
                for j in range(c, ncols):
                    m[i][j] -= q * m[r][j]
            for j in range(c + 1, ncols):
                if m[r][j] % m[r][c]:
                    done = False
                q = m[r][j] // m[r][c]
                for i in range(r, nrows):
                    m[i][j] -= q * m[i][c]
            if any(m[i][c] for i in range(r + 1, nrows)):
                i = next(i for i in range(r + 1, nrows) if m[i][c])
                m[r], m[i] = m[i], m[r]
                continue
            if any(m[r][j] for j in range(c + 1, ncols)):
                j = next(j for j in range(c + 1, ncols) if m[r][j])
                for i in range(r, nrows):
                    m[i][c], m[i][j] = m[i][j], m[i][c]
                continue
            if done:
                break
        # Absorb any entry not divisible by the pivot.
        fixed = False
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                if m[i][j] % m[r][c]:
                    for k in range(c, ncols):
                        m[r][k] += m[i][k]
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        factors.append(abs(m[r][c]))
        r += 1
        c += 1
    return [f for f in factors if f > 1]
