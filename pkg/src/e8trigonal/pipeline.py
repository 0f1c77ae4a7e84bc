"""From a regular semisimple character to a marked trigonal curve.

The construction realizes the character as an 8-point configuration on a
re-embedded singular cubic, checks general position against the four root
families, computes the graded pieces of the anticanonical ring of the
blown-up degree-1 del Pezzo surface by fat-point interpolation, extracts
the unique weighted sextic relation z^2 = f0 w^3 + f2 w^2 + f4 w + f6,
and marks the fiber carrying the image of the cubic, where the w-cubic
acquires a double (nodal case) or triple (cuspidal case) root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from itertools import combinations

from . import cubic, lattice
from .exact import (
    BinaryForm,
    Poly,
    mat_kernel,
    mat_rank,
    mat_rank_certified,
    primitive_vector,
    solve_linear,
)
from .exact.poly import uni_gcd


class NotRegularSemisimple(ValueError):
    """The character sits on a root hyperplane."""


class GeneralPositionFailure(ValueError):
    def __init__(self, certificates):
        self.certificates = certificates
        super().__init__(f"configuration fails general position: {certificates}")


class RingBasisError(RuntimeError):
    """The anticanonical ring computation met a non-generic basis."""


@dataclass(frozen=True)
class PointConfig:
    """Eight cubic parameters plus the line-class constant."""

    kind: str
    params: tuple[Q, ...]
    line_class: Q
    base: Q

    def __post_init__(self):
        if self.kind not in (cubic.NODAL, cubic.CUSPIDAL):
            raise ValueError(f"unknown kind {self.kind!r}")
        if len(self.params) != 8:
            raise ValueError("need 8 parameters")


@dataclass(frozen=True)
class Certificate:
    """Names the root class violated by a degenerate configuration."""

    family: str  # coincident | line | conic | singular_cubic
    indices: tuple[int, ...]
    root: lattice.Vec


def config_from_chi(chi: lattice.Character, base, allow_degenerate: bool = False) -> PointConfig:
    """Realize a character as a point configuration.

    The base parameter is the free choice of first point; the remaining
    parameters and the line class are forced by the character values.
    """
    base = Q(base)
    if chi.mode == "mult":
        kind = cubic.NODAL
        if base == 0:
            raise ValueError("nodal base parameter must be nonzero")
    else:
        kind = cubic.CUSPIDAL
    if not allow_degenerate and not lattice.is_regular_semisimple(chi):
        raise NotRegularSemisimple("character is not in the regular semisimple locus")
    e = lattice.E
    params = [base]
    for i in range(1, 8):
        step = lattice.sub(e[i], e[0])
        val = lattice.eval_character(chi, step)
        params.append(base * val if kind == cubic.NODAL else base + val)
    b8 = lattice.SIMPLE_ROOTS[7]
    v8 = lattice.eval_character(chi, b8)
    if kind == cubic.NODAL:
        line_class = v8 * params[0] * params[1] * params[2]
    else:
        line_class = v8 + params[0] + params[1] + params[2]
    return PointConfig(kind, tuple(params), line_class, base)


def config_character(config: PointConfig) -> lattice.Character:
    """The character induced by a configuration (inverse of config_from_chi)."""
    u = config.params
    if config.kind == cubic.NODAL:
        vals = [u[i] / u[i + 1] for i in range(7)]
        vals.append(config.line_class / (u[0] * u[1] * u[2]))
        return lattice.Character("mult", tuple(vals))
    vals = [u[i] - u[i + 1] for i in range(7)]
    vals.append(config.line_class - (u[0] + u[1] + u[2]))
    return lattice.Character("add", tuple(vals))


def config_root_value(config: PointConfig, v: lattice.Vec) -> Q:
    """Value of the induced character on a root-lattice vector, straight
    from the parameters: degree d contributes the line class, each point
    its parameter."""
    d = v[0]
    mults = v[1:]
    if config.kind == cubic.NODAL:
        out = config.line_class ** d
        for m, u in zip(mults, config.params):
            out *= u ** (-m)
        return out
    out = d * config.line_class
    for m, u in zip(mults, config.params):
        out -= m * u
    return out


def general_position(config: PointConfig) -> list[Certificate]:
    """Empty list when the 8 points are in general position; otherwise
    one certificate per violated root family."""
    u = config.params
    lam = config.line_class
    nodal = config.kind == cubic.NODAL
    bad: list[Certificate] = []
    for i, j in combinations(range(8), 2):
        if u[i] == u[j]:
            root = lattice.sub(lattice.E[i], lattice.E[j])
            bad.append(Certificate("coincident", (i, j), root))
    for t in combinations(range(8), 3):
        hit = (
            u[t[0]] * u[t[1]] * u[t[2]] == lam
            if nodal
            else u[t[0]] + u[t[1]] + u[t[2]] == lam
        )
        if hit:
            root = (1, *[-1 if k in t else 0 for k in range(8)])
            bad.append(Certificate("line", t, root))
    for t in combinations(range(8), 6):
        if nodal:
            prod = Q(1)
            for k in t:
                prod *= u[k]
            hit = prod == lam ** 2
        else:
            hit = sum(u[k] for k in t) == 2 * lam
        if hit:
            root = (2, *[-1 if k in t else 0 for k in range(8)])
            bad.append(Certificate("conic", t, root))
    for dbl in range(8):
        rest = [k for k in range(8) if k != dbl]
        if nodal:
            prod = u[dbl] ** 2
            for k in rest:
                prod *= u[k]
            hit = prod == lam ** 3
        else:
            hit = 2 * u[dbl] + sum(u[k] for k in rest) == 3 * lam
        if hit:
            root = (3, *[-2 if k == dbl else -1 for k in range(8)])
            bad.append(Certificate("singular_cubic", (*rest, dbl), root))
    return bad


# ---- fat-point linear systems ----


def plane_monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(
        (a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)
    )


def _condition_rows(points, d: int, m: int) -> list[list[Q]]:
    monos = plane_monomials(d)
    rows = []
    for pt in points:
        x, y, z = (Q(c) for c in pt)
        for da in range(m):
            for db in range(m - da):
                dc = m - 1 - da - db
                row = []
                for (a, b, c) in monos:
                    if a < da or b < db or c < dc:
                        row.append(Q(0))
                        continue
                    coeff = 1
                    for (e, k) in ((a, da), (b, db), (c, dc)):
                        for i in range(k):
                            coeff *= e - i
                    row.append(
                        coeff
                        * x ** (a - da)
                        * y ** (b - db)
                        * z ** (c - dc)
                    )
                rows.append(row)
    return rows


def linear_system(points, d: int, m: int) -> list[tuple[Q, ...]]:
    """Basis of degree-d plane forms vanishing to order >= m at each
    point, as coefficient vectors over plane_monomials(d)."""
    rows = _condition_rows(points, d, m)
    return [tuple(v) for v in mat_kernel(rows, ncols=len(plane_monomials(d)))]


def linear_system_dim(points, d: int, m: int) -> int:
    """Dimension of the same system (rank certificate, no basis)."""
    rows = _condition_rows(points, d, m)
    return len(plane_monomials(d)) - mat_rank_certified(rows)


# ---- the anticanonical ring and its sextic relation ----


def sextic_monomials() -> tuple[tuple[int, int, int, int], ...]:
    """The 23 monomials s^a t^b w^c z^d of weighted degree 6 under
    weights (1, 1, 2, 3), in a fixed order."""
    out = []
    for dz in (2, 1, 0):
        for cw in range((6 - 3 * dz) // 2, -1, -1):
            rest = 6 - 3 * dz - 2 * cw
            for a in range(rest, -1, -1):
                out.append((a, rest - a, cw, dz))
    return tuple(out)


@dataclass(frozen=True)
class WeightedSextic:
    """The sextic model z^2 = f0 w^3 + f2 w^2 + f4 w + f6 together with
    the ring basis used to derive it."""

    kind: str
    f0: Q
    f2: BinaryForm
    f4: BinaryForm
    f6: BinaryForm
    degree1: tuple[tuple[Q, ...], tuple[Q, ...]]  # F, G cubic coefficients
    degree2: tuple[Q, ...]  # W
    degree3: tuple[Q, ...]  # Z
    relation: tuple[Q, ...]  # over sextic_monomials()
    embedding: cubic.CubicEmbedding
    points: tuple[tuple[Q, ...], ...]


def _poly_of_coeffs(coeffs, monos) -> Poly:
    return Poly(3, {m: c for m, c in zip(monos, coeffs) if c != 0})


def _coeffs_of_poly(p: Poly, monos) -> list[Q]:
    return [p.terms.get(m, Q(0)) for m in monos]


def _complete_to_independent(products, candidates, label):
    """First candidate extending the span of the products, reduced."""
    base = [list(p) for p in products]
    for cand in candidates:
        if mat_rank(base + [list(cand)]) == len(base) + 1:
            return cand
    raise RingBasisError(f"non-generic ring basis: no independent {label}")


def anticanonical_model(config: PointConfig) -> WeightedSextic:
    """Anticanonical ring generators and the unique sextic relation."""
    failures = general_position(config)
    if failures:
        raise GeneralPositionFailure(failures)
    emb = cubic.embed_with_line_class(config.kind, config.line_class)
    points = tuple(emb.point(p) for p in config.params)

    sys3 = linear_system(points, 3, 1)
    if len(sys3) != 2:
        raise RingBasisError("non-generic ring basis: cubic pencil dimension")
    Fc, Gc = sys3[0], sys3[1]
    m3, m6, m9, m18 = (plane_monomials(d) for d in (3, 6, 9, 18))
    Fp, Gp = _poly_of_coeffs(Fc, m3), _poly_of_coeffs(Gc, m3)

    sys6 = linear_system(points, 6, 2)
    if len(sys6) != 4:
        raise RingBasisError("non-generic ring basis: sextic system dimension")
    prods6 = [
        _coeffs_of_poly(Fp * Fp, m6),
        _coeffs_of_poly(Fp * Gp, m6),
        _coeffs_of_poly(Gp * Gp, m6),
    ]
    if mat_rank(prods6) != 3:
        raise RingBasisError("non-generic ring basis: degree-1 squares collapse")
    Wc = _complete_to_independent(prods6, sys6, "degree-2 generator")
    Wp = _poly_of_coeffs(Wc, m6)

    sys9 = linear_system(points, 9, 3)
    if len(sys9) != 7:
        raise RingBasisError("non-generic ring basis: nonic system dimension")
    prods9 = [
        _coeffs_of_poly(Fp ** 3, m9),
        _coeffs_of_poly(Fp ** 2 * Gp, m9),
        _coeffs_of_poly(Fp * Gp ** 2, m9),
        _coeffs_of_poly(Gp ** 3, m9),
        _coeffs_of_poly(Fp * Wp, m9),
        _coeffs_of_poly(Gp * Wp, m9),
    ]
    if mat_rank(prods9) != 6:
        raise RingBasisError("non-generic ring basis: degree-3 products collapse")
    Zc = _complete_to_independent(prods9, sys9, "degree-3 generator")
    Zp = _poly_of_coeffs(Zc, m9)

    smonos = sextic_monomials()
    columns = []
    for (a, b, cw, dz) in smonos:
        prod = Fp ** a * Gp ** b * Wp ** cw * Zp ** dz
        columns.append(_coeffs_of_poly(prod, m18))
    rows = [[columns[j][i] for j in range(len(smonos))] for i in range(len(m18))]
    kernel = mat_kernel(rows)
    if len(kernel) != 1:
        raise RingBasisError("non-generic ring basis: relation space dimension")
    rel = kernel[0]

    z2 = rel[smonos.index((0, 0, 0, 2))]
    if z2 == 0:
        raise RingBasisError("non-generic ring basis: relation misses z^2")
    rel = [c / z2 for c in rel]

    # split the relation z^2 + A(s,t,w) z + B(s,t,w) = 0
    a3 = BinaryForm([_rel(rel, smonos, (3 - i, i, 0, 1)) for i in range(4)])
    a1 = BinaryForm([_rel(rel, smonos, (1 - i, i, 1, 1)) for i in range(2)])
    b3 = _rel(rel, smonos, (0, 0, 3, 0))
    b2 = BinaryForm([_rel(rel, smonos, (2 - i, i, 2, 0)) for i in range(3)])
    b1 = BinaryForm([_rel(rel, smonos, (4 - i, i, 1, 0)) for i in range(5)])
    b0 = BinaryForm([_rel(rel, smonos, (6 - i, i, 0, 0)) for i in range(7)])

    f0 = -b3
    if f0 == 0:
        raise RingBasisError("hyperelliptic degeneration: f0 vanished")
    f2 = (a1 * a1).scale(Q(1, 4)) - b2
    f4 = (a1 * a3).scale(Q(1, 2)) - b1
    f6 = (a3 * a3).scale(Q(1, 4)) - b0
    return WeightedSextic(
        config.kind, f0, f2, f4, f6,
        (tuple(Fc), tuple(Gc)), tuple(Wc), tuple(Zc),
        tuple(rel), emb, points,
    )


def _rel(rel, smonos, key) -> Q:
    return rel[smonos.index(key)]


@dataclass(frozen=True)
class MarkedCurve:
    """Trigonal curve data with the marked ramified fiber."""

    kind: str
    f0: Q
    f2: BinaryForm
    f4: BinaryForm
    f6: BinaryForm
    marked_fiber: tuple[Q, Q]
    w0: Q
    ram_index: int


def extract_marked_point(config: PointConfig, sextic: WeightedSextic) -> MarkedCurve:
    """Locate the pencil member carrying the image of the singular cubic
    and read off the multiple w-root there."""
    mono3 = plane_monomials(3)
    Fc, Gc = sextic.degree1
    target = [Q(c) for c in sextic.embedding.cubic_coeffs]
    rows = [[Fc[i], Gc[i]] for i in range(len(mono3))]
    ab = solve_linear(rows, target)
    if ab is None:
        raise RuntimeError("image of the cubic is not in the anticanonical pencil")
    a, b = ab
    s0, t0 = primitive_vector((-b, a))
    wcubic = [
        sextic.f6.eval(s0, t0),
        sextic.f4.eval(s0, t0),
        sextic.f2.eval(s0, t0),
        sextic.f0,
    ]
    dcubic = [wcubic[1], 2 * wcubic[2], 3 * wcubic[3]]
    g = uni_gcd(wcubic, dcubic)
    if len(g) == 2:
        mult, w0 = 2, -g[0] / g[1]
    elif len(g) == 3:
        mult, w0 = 3, -g[1] / (2 * g[2])
    else:
        raise RuntimeError("marked fiber has no multiple root")
    expected = 2 if config.kind == cubic.NODAL else 3
    if mult != expected:
        raise RuntimeError(
            f"case mismatch: fiber multiplicity {mult} for a {config.kind} run"
        )
    return MarkedCurve(
        config.kind, sextic.f0, sextic.f2, sextic.f4, sextic.f6,
        (s0, t0), w0, mult,
    )


@dataclass(frozen=True)
class PipelineResult:
    curve: MarkedCurve
    sextic: WeightedSextic
    config: PointConfig

    def provenance(self) -> dict:
        return {
            "kind": self.config.kind,
            "base": str(self.config.base),
            "params": [str(u) for u in self.config.params],
            "line_class": str(self.config.line_class),
            "degree1": [[str(c) for c in v] for v in self.sextic.degree1],
            "degree2": [str(c) for c in self.sextic.degree2],
            "degree3": [str(c) for c in self.sextic.degree3],
            "relation": [str(c) for c in self.sextic.relation],
        }


def run_pipeline(chi: lattice.Character, base) -> PipelineResult:
    """Full character-to-marked-curve construction."""
    config = config_from_chi(chi, base)
    sextic = anticanonical_model(config)
    curve = extract_marked_point(config, sextic)
    return PipelineResult(curve, sextic, config)
