"""Dense multivariate polynomials over Q with exact gcd and resultants.

A Poly stores a variable count and a terms map {exponent tuple: Fraction};
zero coefficients are never stored.  Univariate gcds run a primitive
subresultant remainder sequence over the integers, and resultants are
Sylvester determinants with the rows of the first argument on top.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd, lcm
from typing import Iterable, Mapping


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Q] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Q] = {}
        if terms:
            for exp, c in terms.items():
                c = Q(c)
                if c != 0:
                    if len(exp) != nvars:
                        raise ValueError("exponent tuple has wrong length")
                    clean[tuple(exp)] = c
        self.terms = clean

    # ---- constructors ----

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: Q(c)})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): Q(1)})

    # ---- predicates / views ----

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self) -> Q:
        return self.terms.get((0,) * self.nvars, Q(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(exp[var] for exp in self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        bits = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(f"x{i}^{e}" for i, e in enumerate(exp) if e)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "Poly(" + " + ".join(bits) + ")"

    # ---- arithmetic ----

    def __add__(self, other: "Poly") -> "Poly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Q(0)) + c
        return Poly(self.nvars, terms)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms: dict[tuple[int, ...], Q] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, Q(0)) + c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Q(c)
        return Poly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self, var: int) -> "Poly":
        terms: dict[tuple[int, ...], Q] = {}
        for exp, c in self.terms.items():
            e = exp[var]
            if e:
                nxt = list(exp)
                nxt[var] = e - 1
                key = tuple(nxt)
                terms[key] = terms.get(key, Q(0)) + c * e
        return Poly(self.nvars, terms)

    def eval(self, point: Iterable) -> Q:
        vals = [Q(v) for v in point]
        if len(vals) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = Q(0)
        for exp, c in self.terms.items():
            t = c
            for v, e in zip(vals, exp):
                if e:
                    t *= v ** e
            total += t
        return total

    def coeffs_in(self, var: int) -> list["Poly"]:
        """Coefficients [c0..cd] of self viewed as a polynomial in one
        variable, each a Poly in the same ambient variables."""
        d = max(self.degree_in(var), 0)
        buckets: list[dict[tuple[int, ...], Q]] = [{} for _ in range(d + 1)]
        for exp, c in self.terms.items():
            e = exp[var]
            rest = list(exp)
            rest[var] = 0
            buckets[e][tuple(rest)] = c
        return [Poly(self.nvars, b) for b in buckets]


# ---- univariate helpers on coefficient lists (index = power) ----


def _trim(cs: list[Q]) -> list[Q]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def unipoly_from_poly(f: Poly, var: int | None = None) -> list[Q]:
    """Coefficient list of a univariate Poly (the single active variable)."""
    if var is None:
        active = {i for exp in f.terms for i, e in enumerate(exp) if e}
        if len(active) > 1:
            raise ValueError("polynomial is not univariate")
        var = active.pop() if active else 0
    cs = [Q(0)] * (max(f.degree_in(var), 0) + 1)
    for exp, c in f.terms.items():
        if any(e and i != var for i, e in enumerate(exp)):
            raise ValueError("polynomial is not univariate in the given variable")
        cs[exp[var]] = c
    return _trim(cs)


def poly_from_unipoly(cs: Iterable[Q], nvars: int, var: int) -> Poly:
    terms = {}
    for e, c in enumerate(cs):
        if c:
            exp = [0] * nvars
            exp[var] = e
            terms[tuple(exp)] = Q(c)
    return Poly(nvars, terms)


def uni_eval(cs: list[Q], x: Q) -> Q:
    out = Q(0)
    for c in reversed(cs):
        out = out * x + c
    return out


def uni_derivative(cs: list[Q]) -> list[Q]:
    return _trim([c * e for e, c in enumerate(cs)][1:])


def uni_divmod(num: list[Q], den: list[Q]) -> tuple[list[Q], list[Q]]:
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    num = list(num)
    q = [Q(0)] * max(len(num) - len(den) + 1, 0)
    inv = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / inv
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return _trim(q), _trim(num)


def _uni_primitive_int(cs: list[Q]) -> list[int]:
    if not cs:
        return []
    scale = lcm(*(c.denominator for c in cs))
    ints = [int(c * scale) for c in cs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def uni_gcd(a: list[Q], b: list[Q]) -> list[Q]:
    """Monic gcd via a primitive pseudo-remainder sequence over Z."""
    fa, fb = _uni_primitive_int(list(a)), _uni_primitive_int(list(b))
    if not fa and not fb:
        raise ValueError("gcd undefined")
    while fb:
        # pseudo-remainder of fa by fb
        r = [Q(x) for x in fa]
        d = [Q(x) for x in fb]
        k = len(r) - len(d)
        if k < 0:
            fa, fb = fb, fa
            continue
        lead = d[-1]
        scaled = [c * lead ** (k + 1) for c in r]
        _, rem = uni_divmod(scaled, d)
        fa, fb = fb, _uni_primitive_int(rem)
    lead = Q(fa[-1])
    return [Q(c) / lead for c in fa]


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor of two univariate polynomials."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd undefined")
    if f.is_zero() or g.is_zero():
        h = g if f.is_zero() else f
        cs = unipoly_from_poly(h)
        var = _active_var(h)
        lead = cs[-1]
        return poly_from_unipoly([c / lead for c in cs], h.nvars, var)
    var_f, var_g = _active_var(f), _active_var(g)
    if var_f is not None and var_g is not None and var_f != var_g:
        raise ValueError("polynomials in different variables")
    var = var_f if var_f is not None else (var_g if var_g is not None else 0)
    if f.nvars != g.nvars:
        raise ValueError("variable count mismatch")
    cs = uni_gcd(unipoly_from_poly(f, var), unipoly_from_poly(g, var))
    return poly_from_unipoly(cs, f.nvars, var)


def _active_var(f: Poly) -> int | None:
    active = {i for exp in f.terms for i, e in enumerate(exp) if e}
    if len(active) > 1:
        raise ValueError("polynomial is not univariate")
    return active.pop() if active else None


# ---- resultants ----


def _det_laplace(matrix: list[list[Poly]], nvars: int) -> Poly:
    """Determinant by column-subset dynamic programming (domain-agnostic)."""
    n = len(matrix)
    if n == 0:
        return Poly.const(nvars, 1)
    prev: dict[int, Poly] = {0: Poly.const(nvars, 1)}
    for i in range(n):
        nxt: dict[int, Poly] = {}
        for mask, val in prev.items():
            sign = 1
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = matrix[i][j]
                if not entry.is_zero():
                    key = mask | bit
                    term = val * entry
                    if sign < 0:
                        term = -term
                    nxt[key] = nxt.get(key, Poly.zero(nvars)) + term
                sign = -sign
        prev = {k: v for k, v in nxt.items() if not v.is_zero()}
        if not prev:
            return Poly.zero(nvars)
    return prev.get((1 << n) - 1, Poly.zero(nvars))


def resultant(f: Poly, g: Poly, var: int) -> Poly:
    """Sylvester resultant of f and g with respect to one variable.

    Rows of f come first; entries are polynomials in the remaining
    variables.  Raises if either argument is zero in the variable.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of zero polynomial")
    m, n = f.degree_in(var), g.degree_in(var)
    if m <= 0 and n <= 0:
        raise ValueError("both polynomials constant in the variable")
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    size = m + n
    zero = Poly.zero(f.nvars)
    rows: list[list[Poly]] = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        rows.append(row)
    return _det_laplace(rows, f.nvars)
