"""Uniquely trigonal genus-4 curves in P(1:1:2): ramification analysis.

A curve is the zero locus of F = f0 w^3 + f2(s,t) w^2 + f4(s,t) w + f6(s,t)
with f0 a nonzero constant, so the projection to (s:t) is the degree-3
map.  The degree-12 discriminant of F in w controls ramification: simple
roots are simple branch points, a smooth curve carries a double root
exactly at a totally ramified fiber, and any other multiplicity pattern
certifies a singular point.  Comparisons across coordinate changes use
weight-balanced ratios of transvectant invariants of the 12-form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .exact import (
    BinaryForm,
    Poly,
    bf_exact_div,
    bf_gcd,
    resultant,
    root_multiplicity,
    squarefree_decomposition,
    transvectant,
)
from .exact.poly import uni_gcd


@dataclass(frozen=True)
class TrigonalCurve:
    f0: Q
    f2: BinaryForm
    f4: BinaryForm
    f6: BinaryForm

    def __post_init__(self):
        if Q(self.f0) == 0:
            raise ValueError("f0 must be nonzero (hyperelliptic model rejected)")
        object.__setattr__(self, "f0", Q(self.f0))
        for name, deg in (("f2", 2), ("f4", 4), ("f6", 6)):
            form = getattr(self, name)
            if form.degree != deg:
                raise ValueError(f"{name} must have degree {deg}")

    def defining_poly(self) -> Poly:
        """F as a polynomial in the variables (s, t, w)."""
        w = Poly.var(3, 2)
        out = Poly.const(3, self.f0) * w ** 3
        for form, power in ((self.f2, 2), (self.f4, 1), (self.f6, 0)):
            d = form.degree
            terms = {}
            for i, c in enumerate(form.coeffs):
                if c:
                    terms[(d - i, i, 0)] = c
            out = out + Poly(3, terms) * w ** power
        return out

    def w_cubic_at(self, s0, t0) -> list[Q]:
        """Coefficients [c0, c1, c2, c3] of the fiber cubic in w."""
        s0, t0 = Q(s0), Q(t0)
        return [
            self.f6.eval(s0, t0),
            self.f4.eval(s0, t0),
            self.f2.eval(s0, t0),
            self.f0,
        ]

    def depressed(self) -> "TrigonalCurve":
        """Complete the cube: the equivalent model with f2 = 0."""
        sh = self.f2.scale(Q(-1, 3) / self.f0)  # w -> w + sh(s,t)
        f2n = self.f2 + (3 * self.f0) * sh
        f4n = self.f4 + self.f2 * sh.scale(2) + (3 * self.f0) * (sh * sh)
        f6n = self.f6 + self.f4 * sh + self.f2 * (sh * sh) + (sh * sh * sh).scale(self.f0)
        assert f2n.is_zero()
        return TrigonalCurve(self.f0, f2n, f4n, f6n)


def ramification_form(curve: TrigonalCurve) -> BinaryForm:
    """Discriminant of the fiber cubic as a degree-12 binary form."""
    F = curve.defining_poly()
    Fw = F.derivative(2)
    res = resultant(F, Fw, 2)  # a polynomial in (s, t)
    disc = res.scale(Q(-1) / curve.f0)
    coeffs = [Q(0)] * 13
    for (a, b, c), v in disc.terms.items():
        if c != 0 or a + b != 12:
            raise AssertionError("discriminant is not a degree-12 form")
        coeffs[b] = v
    form = BinaryForm(coeffs)
    if form.is_zero():
        raise ValueError("non-reduced fibers everywhere")
    return form


@dataclass(frozen=True)
class MarkedPointClass:
    kind: str  # unramified | simple | total | degenerate
    w0: Q | None


def classify_marked_point(curve: TrigonalCurve, fiber) -> MarkedPointClass:
    """Multiplicity pattern of the w-cubic at a fiber."""
    s0, t0 = (Q(c) for c in fiber)
    cs = curve.w_cubic_at(s0, t0)
    ds = [cs[1], 2 * cs[2], 3 * cs[3]]
    g = uni_gcd(cs, ds)
    if len(g) == 1:
        return MarkedPointClass("unramified", None)
    if len(g) == 2:
        return MarkedPointClass("simple", -g[0] / g[1])
    if len(g) == 3:
        return MarkedPointClass("total", -g[1] / (2 * g[2]))
    return MarkedPointClass("degenerate", None)


def smoothness_check(curve: TrigonalCurve) -> str:
    """'smooth', 'singular', or 'inconclusive'.

    The squarefree structure of the 12-form decides almost everything:
    simple roots are harmless, multiplicity >= 3 certifies a singular
    point, and a multiplicity-2 factor is harmless exactly when its roots
    are triple-root (totally ramified) fibers at which the s- and
    t-partials do not both vanish.  All tests are gcd computations over Q.
    """
    disc = ramification_form(curve)
    parts = squarefree_decomposition(disc)
    multiple = [(g, m) for g, m in parts if m >= 2]
    if not multiple:
        return "smooth"
    if any(m >= 3 for _, m in multiple):
        return "singular"
    # triple-root locus of the fiber cubic: both covariants vanish
    a, b, c, d = curve.f0, curve.f2, curve.f4, curve.f6
    p1 = b * b - (3 * a) * c  # degree 4
    p2 = b * c - (9 * a) * d  # degree 6
    for g2, _ in multiple:
        if p1.is_zero() or p2.is_zero():
            triple_part = g2
        else:
            t_locus = bf_gcd(p1, p2)
            triple_part = bf_gcd(g2, t_locus)
        if triple_part.degree < g2.degree:
            # a double-but-not-triple w-root with discriminant order 2
            return "singular"
        # at the triple root w0 = -f2/(3 f0), test the (s, t) partials
        ns = _partial_at_triple_root(curve, "s")
        nt = _partial_at_triple_root(curve, "t")
        if ns.is_zero() and nt.is_zero():
            return "singular"
        common = triple_part
        for n in (ns, nt):
            if n.is_zero():
                continue
            common = bf_gcd(common, n)
        if common.degree >= 1:
            return "singular"
    return "smooth"


def _partial_at_triple_root(curve: TrigonalCurve, var: str) -> BinaryForm:
    """Numerator of dF/dvar evaluated at w = -f2/(3 f0), scaled by (3 f0)^2."""
    a = curve.f0
    if var == "s":
        d2, d4, d6 = (curve.f2.derivative_s(), curve.f4.derivative_s(),
                      curve.f6.derivative_s())
    else:
        d2, d4, d6 = (curve.f2.derivative_t(), curve.f4.derivative_t(),
                      curve.f6.derivative_t())
    # F_var = d2 w^2 + d4 w + d6 at w0 = -f2/(3a), times 9 a^2:
    return d2 * curve.f2 * curve.f2 - (3 * a) * (d4 * curve.f2) + (9 * a * a) * _pad_to(d6, 5)


def _pad_to(form: BinaryForm, deg: int) -> BinaryForm:
    if form.degree == deg:
        return form
    raise AssertionError("degree bookkeeping error")


def canonical_model_p3(curve: TrigonalCurve) -> tuple[Poly, Poly]:
    """Canonical model as a quadric cone and cubic in P^3 via
    (X0, X1, X2, X3) = (s^2, st, t^2, w)."""
    x0, x1, x2, x3 = (Poly.var(4, i) for i in range(4))
    quadric = x0 * x2 - x1 * x1
    cubic = Poly.const(4, curve.f0) * x3 ** 3
    for form, wpow in ((curve.f2, 2), (curve.f4, 1), (curve.f6, 0)):
        rewritten = _rewrite_even_form(form)
        cubic = cubic + rewritten * x3 ** wpow
    return quadric, cubic


def _rewrite_even_form(form: BinaryForm) -> Poly:
    """Express a binary form of even degree 2k as a degree-k polynomial in
    (X0, X1, X2) = (s^2, st, t^2), writing s^a t^b with odd a as X1 times
    the even remainder."""
    d = form.degree
    if d % 2:
        raise ValueError("need an even-degree form")
    out = Poly.zero(4)
    for i, c in enumerate(form.coeffs):
        if c == 0:
            continue
        a, b = d - i, i
        exp = [0, 0, 0, 0]
        if a % 2:
            exp[1] += 1
            a -= 1
            b -= 1
        exp[0] += a // 2
        exp[2] += b // 2
        out = out + Poly(4, {tuple(exp): c})
    return out


# ---- PGL2-invariant signatures of the 12-form ----

_INVARIANTS = (
    ("i2", 2, lambda f: transvectant(f, f, 12)),
    ("i3", 3, lambda f: transvectant(transvectant(f, f, 6), f, 12)),
    ("i4a", 4, lambda f: transvectant(transvectant(f, f, 8), transvectant(f, f, 8), 8)),
    ("i4b", 4, lambda f: transvectant(transvectant(f, f, 10), transvectant(f, f, 10), 4)),
)


def invariant_values(form: BinaryForm) -> list[tuple[str, int, Q]]:
    if form.degree != 12:
        raise ValueError("signature is defined for degree-12 forms")
    out = []
    for name, cdeg, func in _INVARIANTS:
        val = func(form)
        if val.degree != 0:
            raise AssertionError("invariant did not come out constant")
        out.append((name, cdeg, val.coeffs[0]))
    return out


def invariant_signature(form: BinaryForm):
    """Weight-balanced invariant ratios, exactly equal across any
    invertible substitution of (s, t) and any rescaling of the form.

    Returns ('null',) when every listed invariant vanishes; otherwise
    (anchor name, ratio for each later invariant in the fixed order).
    """
    if form.is_zero():
        raise ValueError("signature of the zero form")
    vals = invariant_values(form)
    anchor = next(((n, d, v) for n, d, v in vals if v != 0), None)
    if anchor is None:
        return ("null",)
    name0, d0, v0 = anchor
    from math import gcd

    sig: list = [name0]
    for name, d, v in vals:
        if name == name0:
            continue
        g = gcd(d, d0)
        sig.append(v ** (d0 // g) / v0 ** (d // g))
    return tuple(sig)
