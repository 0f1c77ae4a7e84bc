"""Binary forms in (s, t) with exact coefficients.

Coefficient index i holds the coefficient of s^(d-i) t^i.  Transvectants
use the classical factorial normalization of the omega process; gcds and
multiplicities treat the form projectively, so roots at (1:0) (powers of
t dividing the form) are handled alongside finite ones.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import comb
from typing import Iterable

from .poly import Q as _Q  # re-exported Fraction alias for callers
from .poly import uni_derivative, uni_divmod, uni_eval, uni_gcd


class BinaryForm:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(Q(c) for c in coeffs)
        if not cs:
            raise ValueError("a binary form needs at least one coefficient")
        self.coeffs = cs

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls([Q(0)] * (degree + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        d = self.degree
        bits = [f"{c}*s^{d - i}t^{i}" for i, c in enumerate(self.coeffs) if c]
        return "BinaryForm(" + (" + ".join(bits) or "0") + ")"

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "BinaryForm":
        return BinaryForm([-c for c in self.coeffs])

    def __mul__(self, other) -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        out = [Q(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return BinaryForm(out)

    __rmul__ = __mul__

    def scale(self, c) -> "BinaryForm":
        c = Q(c)
        return BinaryForm([x * c for x in self.coeffs])

    def eval(self, s, t) -> Q:
        s, t = Q(s), Q(t)
        d = self.degree
        return sum((c * s ** (d - i) * t ** i for i, c in enumerate(self.coeffs)), Q(0))

    def derivative_s(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm([Q(0)])
        return BinaryForm([(d - i) * c for i, c in enumerate(self.coeffs[:-1])])

    def derivative_t(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm([Q(0)])
        return BinaryForm([i * c for i, c in enumerate(self.coeffs[1:], start=1)])

    def substitute(self, m) -> "BinaryForm":
        """Precompose with the linear substitution (s, t) -> (as+bt, cs+dt)
        given by a 2x2 matrix [[a, b], [c, d]]."""
        (a, b), (c, d) = m
        a, b, c, d = Q(a), Q(b), Q(c), Q(d)
        deg = self.degree
        s_img = BinaryForm([a, b])
        t_img = BinaryForm([c, d])
        out = BinaryForm.zero(deg)
        for i, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            term = BinaryForm([coeff])
            for _ in range(deg - i):
                term = term * s_img
            for _ in range(i):
                term = term * t_img
            pad = deg - term.degree
            if pad:
                term = term * BinaryForm([Q(1)] + [Q(0)] * pad) if False else term
            out = out + term
        return out

    # ---- conversions ----

    def to_unipoly(self) -> list[Q]:
        """Coefficient list in x = s/t (the dehomogenization at t = 1).

        The list index is the power of x, so coeffs reverse order; trailing
        roots at (1:0) show up as a degree drop.
        """
        return _trim([c for c in reversed(self.coeffs)])

    @classmethod
    def from_unipoly(cls, cs: list[Q], degree: int) -> "BinaryForm":
        if len(cs) - 1 > degree:
            raise ValueError("degree too small for coefficient list")
        out = [Q(0)] * (degree + 1)
        for e, c in enumerate(cs):
            out[degree - e] = Q(c)
        return cls(out)


def _trim(cs: list[Q]) -> list[Q]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def transvectant(f: BinaryForm, g: BinaryForm, k: int) -> BinaryForm:
    """Classical k-th transvectant with the factorial normalization
    (d1-k)!(d2-k)!/(d1! d2!) applied to the omega process."""
    d1, d2 = f.degree, g.degree
    if k < 0 or k > min(d1, d2):
        raise ValueError("transvectant index out of range")
    # norm = (d1-k)! (d2-k)! / (d1! d2!)
    num = den = 1
    for i in range(k):
        den *= (d1 - i) * (d2 - i)
    norm = Q(num, den)
    fs: list[BinaryForm] = [f]
    gs: list[BinaryForm] = [g]
    for _ in range(k):
        fs.append(fs[-1].derivative_s())
        gs.append(gs[-1].derivative_s())
    # partials: d^k f / ds^(k-i) dt^i
    out = BinaryForm.zero(d1 + d2 - 2 * k)
    for i in range(k + 1):
        df = _mixed_partial(f, k - i, i)
        dg = _mixed_partial(g, i, k - i)
        term = df * dg
        coeff = Q((-1) ** i * comb(k, i))
        out = out + term.scale(coeff * norm)
    return out


def _mixed_partial(f: BinaryForm, a: int, b: int) -> BinaryForm:
    out = f
    for _ in range(a):
        out = out.derivative_s()
    for _ in range(b):
        out = out.derivative_t()
    return out


def bf_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Projective gcd of two binary forms, normalized primitive with a
    positive leading coefficient."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd undefined")
    if f.is_zero() or g.is_zero():
        h = g if f.is_zero() else f
        return _normalize(h)
    uf, ug = f.to_unipoly(), g.to_unipoly()
    t_mult = min(f.degree - (len(uf) - 1), g.degree - (len(ug) - 1))
    core = uni_gcd(uf, ug)
    deg = (len(core) - 1) + t_mult
    base = BinaryForm.from_unipoly(core, len(core) - 1)
    if t_mult:
        tpow = BinaryForm([Q(0)] * t_mult + [Q(1)])
        base = base * tpow
    return _normalize(base)


def _normalize(f: BinaryForm) -> BinaryForm:
    lead = next((c for c in f.coeffs if c != 0), Q(1))
    return f.scale(1 / lead)


def bf_exact_div(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Exact quotient f / g; raises if the division is not exact."""
    uf, ug = f.to_unipoly(), g.to_unipoly()
    tf = f.degree - (len(uf) - 1)
    tg = g.degree - (len(ug) - 1)
    if tg > tf:
        raise ValueError("division not exact (t-multiplicity)")
    quot, rem = uni_divmod(uf, ug)
    if rem:
        raise ValueError("division not exact")
    return BinaryForm.from_unipoly(quot, f.degree - g.degree)


def root_multiplicity(f: BinaryForm, s0, t0) -> int:
    """Multiplicity of the projective root (s0 : t0) of f."""
    s0, t0 = Q(s0), Q(t0)
    if s0 == 0 and t0 == 0:
        raise ValueError("(0:0) is not a projective point")
    lin = BinaryForm([t0, -s0])
    mult = 0
    cur = f
    while not cur.is_zero() and cur.degree >= 1 and cur.eval(s0, t0) == 0:
        cur = bf_exact_div(cur, lin)
        mult += 1
        if cur.degree == 0:
            break
    if cur.degree == 0 or cur.is_zero():
        return mult
    return mult


def squarefree_decomposition(f: BinaryForm) -> list[tuple[BinaryForm, int]]:
    """Yun decomposition f = c * prod g_i^i with g_i squarefree, coprime.

    Returned parts are normalized; constant parts are dropped.  Roots at
    (1:0) are included via the t-power bookkeeping.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of zero")
    uf = f.to_unipoly()
    t_mult = f.degree - (len(uf) - 1)
    parts: list[tuple[BinaryForm, int]] = []
    if len(uf) > 1:
        a = uf
        da = uni_derivative(a)
        g = uni_gcd(a, da)
        b, _ = uni_divmod(a, g)
        c, _ = uni_divmod(da, g)
        i = 1
        while len(b) > 1:
            d = [x - y for x, y in _pad(c, uni_derivative(b))]
            d = _trim(list(d))
            h = uni_gcd(b, d) if d else [x / b[-1] for x in b]
            if len(h) > 1:
                parts.append((BinaryForm.from_unipoly(h, len(h) - 1), i))
            b2, _ = uni_divmod(b, h)
            c2, _ = uni_divmod(d, h) if d else ([], [])
            b, c = b2, c2
            i += 1
    if t_mult:
        parts.append((BinaryForm([Q(0), Q(1)]), t_mult))
    # merge parts of equal multiplicity
    merged: dict[int, BinaryForm] = {}
    for g, m in parts:
        merged[m] = merged[m] * g if m in merged else g
    return [(_normalize(g), m) for m, g in sorted(merged.items())]


def _pad(a: list[Q], b: list[Q]) -> list[tuple[Q, Q]]:
    n = max(len(a), len(b))
    a = a + [Q(0)] * (n - len(a))
    b = b + [Q(0)] * (n - len(b))
    return list(zip(a, b))
