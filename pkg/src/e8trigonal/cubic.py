"""Nodal and cuspidal plane cubics with their group-law parametrizations.

Reference models in coordinates (x : y : z):

  nodal     y^2 z = x^3 + x^2 z     node at (0:0:1), identity (0:1:0)
  cuspidal  y^2 z = x^3             cusp at (0:0:1), identity (0:1:0)

The smooth locus of the nodal model is parametrized by u in Gm through
the slope map composed with u = (m+1)/(m-1), so that u = 1 lands on the
inflection at infinity and three smooth points are collinear exactly when
their parameters multiply to 1.  The cuspidal model is parametrized by
m in Ga via m -> (m : 1 : m^3), with collinearity the vanishing of the
parameter sum.  Re-embedding by a degree-3 divisor with prescribed class
produces plane models whose line sections have any requested class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import NamedTuple

from .exact import Poly, mat_kernel, primitive_vector
from .exact.poly import uni_gcd

NODAL = "nodal"
CUSPIDAL = "cuspidal"


def reference_model(kind: str) -> Poly:
    """Defining cubic of the reference model, as a form in (x, y, z)."""
    x, y, z = (Poly.var(3, i) for i in range(3))
    if kind == NODAL:
        return y * y * z - x ** 3 - x * x * z
    if kind == CUSPIDAL:
        return y * y * z - x ** 3
    raise ValueError(f"unknown kind {kind!r}")


SINGULAR_POINT = (Q(0), Q(0), Q(1))
IDENTITY_POINT = (Q(0), Q(1), Q(0))


@dataclass(frozen=True)
class SmoothPoint:
    kind: str
    param: Q
    coords: tuple[Q, Q, Q]


def param_point(kind: str, value) -> SmoothPoint:
    """Smooth point of the reference model with the given group parameter."""
    v = Q(value)
    if kind == NODAL:
        if v == 0:
            raise ValueError("parameter 0 addresses a node branch")
        coords = (4 * v * (v - 1), 4 * v * (v + 1), (v - 1) ** 3)
    elif kind == CUSPIDAL:
        coords = (v, Q(1), v ** 3)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    coords = tuple(primitive_vector(coords))
    return SmoothPoint(kind, v, coords)


class CollinearResult(NamedTuple):
    collinear: bool
    parameter_identity: bool


def collinear_test(p: SmoothPoint, q: SmoothPoint, r: SmoothPoint) -> CollinearResult:
    """Determinant collinearity of three smooth points, paired with the
    group-law identity (product 1 for nodal, sum 0 for cuspidal)."""
    if not (p.kind == q.kind == r.kind):
        raise ValueError("points live on different cubics")
    det = _det3(p.coords, q.coords, r.coords)
    if p.kind == NODAL:
        ident = p.param * q.param * r.param == 1
    else:
        ident = p.param + q.param + r.param == 0
    return CollinearResult(det == 0, ident)


def _det3(a, b, c) -> Q:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def divisor_class(divisor: list[tuple[SmoothPoint, int]]) -> tuple[int, Q]:
    """(degree, class value) of a formal sum of smooth points; two
    effective divisors of equal degree are linearly equivalent iff the
    class values agree."""
    if not divisor:
        return 0, Q(1)
    kind = divisor[0][0].kind
    deg = 0
    value = Q(1) if kind == NODAL else Q(0)
    for pt, mult in divisor:
        if pt.kind != kind:
            raise ValueError("mixed cubic kinds in a divisor")
        deg += mult
        if kind == NODAL:
            value *= pt.param ** mult
        else:
            value += mult * pt.param
    return deg, value


@dataclass(frozen=True)
class RRBasis:
    """Basis of the rational functions with poles bounded by a degree-3
    divisor on the smooth locus: numerators over one monic denominator."""

    kind: str
    numerators: tuple[tuple[Q, ...], ...]  # coefficient lists, degree <= 3
    denominator: tuple[Q, ...]


def rr_space(kind: str, divisor: list[tuple[Q, int]]) -> RRBasis:
    """Riemann-Roch space of a degree-3 effective divisor, computed on the
    normalization with the singular-point gluing condition."""
    if sum(m for _, m in divisor) != 3 or any(m <= 0 for _, m in divisor):
        raise ValueError("need an effective divisor of degree 3")
    h = [Q(1)]
    for p, mult in divisor:
        p = Q(p)
        if kind == NODAL and p == 0:
            raise ValueError("divisor touches the node")
        for _ in range(mult):
            h = _mul_linear(h, p)
    if len(h) != 4:
        raise AssertionError("denominator degree drift")
    if kind == NODAL:
        # f(0) = f(infinity): g0 - h0 g3 = 0
        condition = [Q(1), Q(0), Q(0), -h[0]]
    elif kind == CUSPIDAL:
        # derivative at the cusp preimage (coordinate 1/m) vanishes:
        # g2 - h2 g3 = 0
        condition = [Q(0), Q(0), Q(1), -h[2]]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    basis = mat_kernel([condition])
    if len(basis) != 3:
        raise AssertionError("Riemann-Roch space has unexpected dimension")
    return RRBasis(kind, tuple(tuple(v) for v in basis), tuple(h))


def _mul_linear(cs: list[Q], root: Q) -> list[Q]:
    out = [Q(0)] * (len(cs) + 1)
    for i, c in enumerate(cs):
        out[i] -= c * root
        out[i + 1] += c
    return out


_MONOMIALS3 = tuple(
    (a, b, 3 - a - b) for a in range(3, -1, -1) for b in range(3 - a, -1, -1)
)


def cubic_monomials() -> tuple[tuple[int, int, int], ...]:
    """Exponent order used for plane-cubic coefficient vectors."""
    return _MONOMIALS3


@dataclass(frozen=True)
class CubicEmbedding:
    """A plane model of the singular cubic with prescribed line class."""

    kind: str
    line_class: Q
    basis: RRBasis
    cubic_coeffs: tuple[Q, ...]  # over cubic_monomials()
    singular_image: tuple[Q, Q, Q]

    def point(self, param) -> tuple[Q, ...]:
        """Image of the smooth point with the given parameter."""
        p = Q(param)
        if self.kind == NODAL and p == 0:
            raise ValueError("parameter 0 addresses a node branch")
        vals = [_eval_list(g, p) for g in self.basis.numerators]
        if all(v == 0 for v in vals):
            raise AssertionError("basis functions share a zero")
        return tuple(primitive_vector(vals))

    def parameter_of_point(self, coords) -> Q:
        """Invert the embedding at a smooth image point."""
        coords = [Q(c) for c in coords]
        polys = []
        gs = self.basis.numerators
        for i in range(3):
            for j in range(i + 1, 3):
                cs = [gi * coords[j] - gj * coords[i]
                      for gi, gj in zip(gs[i], gs[j])]
                while cs and cs[-1] == 0:
                    cs.pop()
                if cs:
                    polys.append(cs)
        if not polys:
            raise ValueError("point does not determine a parameter")
        g = polys[0]
        for p in polys[1:]:
            g = uni_gcd(g, p)
        if len(g) != 2:
            raise ValueError("point is singular or not on the embedded cubic")
        return -g[0] / g[1]

    def evaluate_cubic(self, coords) -> Q:
        coords = [Q(c) for c in coords]
        total = Q(0)
        for (a, b, c), coeff in zip(_MONOMIALS3, self.cubic_coeffs):
            if coeff:
                total += coeff * coords[0] ** a * coords[1] ** b * coords[2] ** c
        return total


def _eval_list(cs, x: Q) -> Q:
    out = Q(0)
    for c in reversed(cs):
        out = out * x + c
    return out


def embed_with_line_class(kind: str, line_class) -> CubicEmbedding:
    """Embed the abstract cubic so that a line section has the given
    class value (parameter product for nodal, sum for cuspidal)."""
    cls = Q(line_class)
    if kind == NODAL:
        if cls == 0:
            raise ValueError("nodal line class must be nonzero")
        ident = Q(1)
    elif kind == CUSPIDAL:
        ident = Q(0)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if cls == ident:
        divisor = [(ident, 3)]
    else:
        divisor = [(cls, 1), (ident, 2)]
    basis = rr_space(kind, divisor)
    cubic = _image_cubic(basis)
    if kind == NODAL:
        sing = tuple(g[0] for g in basis.numerators)  # value at u = 0
        sing_inf = tuple(g[3] for g in basis.numerators)
        if not _proportional(sing, sing_inf):
            raise AssertionError("node branches map to different points")
    else:
        sing = tuple(g[3] for g in basis.numerators)  # value at m = infinity
    sing = tuple(primitive_vector(sing))
    return CubicEmbedding(kind, cls, basis, cubic, sing)


def _proportional(a, b) -> bool:
    return (
        a[0] * b[1] == a[1] * b[0]
        and a[0] * b[2] == a[2] * b[0]
        and a[1] * b[2] == a[2] * b[1]
    )


def _image_cubic(basis: RRBasis) -> tuple[Q, ...]:
    """The unique plane cubic through the parametrized image."""
    gs = [list(g) for g in basis.numerators]

    def poly_pow(cs, n):
        out = [Q(1)]
        for _ in range(n):
            out = _list_mul(out, cs)
        return out

    columns = []
    for (a, b, c) in _MONOMIALS3:
        prod = _list_mul(_list_mul(poly_pow(gs[0], a), poly_pow(gs[1], b)),
                         poly_pow(gs[2], c))
        prod += [Q(0)] * (10 - len(prod))
        columns.append(prod[:10])
    rows = [[columns[j][i] for j in range(10)] for i in range(10)]
    kernel = mat_kernel(rows)
    if len(kernel) != 1:
        raise AssertionError("image cubic is not unique")
    return tuple(kernel[0])


def _list_mul(a, b):
    out = [Q(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] += x * y
    return out


def third_intersection(emb: CubicEmbedding, p1, p2) -> Q:
    """Parameter of the third intersection of the embedded cubic with the
    line through the images of two given parameters."""
    a = emb.point(p1)
    b = emb.point(p2)
    if _proportional(a, b):
        raise ValueError("points coincide")
    # restrict the cubic to the line x*a + y*b: a binary cubic in (x, y)
    coeffs = [Q(0)] * 4  # coefficient of x^(3-i) y^i
    for (e0, e1, e2), c in zip(_MONOMIALS3, emb.cubic_coeffs):
        if c == 0:
            continue
        term = [Q(1)]
        for idx, e in ((0, e0), (1, e1), (2, e2)):
            for _ in range(e):
                term = _list_mul(term, [a[idx], b[idx]])
        for i, t in enumerate(term):
            coeffs[i] += c * t
    # roots at (0:1) and (1:0) correspond to the two chosen points
    if coeffs[0] != 0 or coeffs[3] != 0:
        raise AssertionError("chosen points are not on the cubic")
    if coeffs[1] == 0 and coeffs[2] == 0:
        raise ValueError("line is contained in a degenerate locus")
    # remaining factor: coeffs[1] x + coeffs[2] y = 0
    third = tuple(
        -coeffs[2] * ai + coeffs[1] * bi for ai, bi in zip(a, b)
    )
    if all(v == 0 for v in third):
        raise ValueError("third intersection degenerates")
    return emb.parameter_of_point(third)
