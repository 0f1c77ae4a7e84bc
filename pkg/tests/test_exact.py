"""Exact-core tests: kernels, gcds, resultants, transvectants."""

import random
from fractions import Fraction as Q

import pytest

from e8trigonal.exact import (
    BinaryForm,
    Poly,
    bf_gcd,
    mat_kernel,
    mat_rank,
    mat_rank_certified,
    poly_gcd,
    resultant,
    root_multiplicity,
    smith_invariant_factors,
    squarefree_decomposition,
    transvectant,
)


def _x():
    return Poly.var(1, 0)


def _poly1(*coeffs):
    # coeffs ascending: c0 + c1 x + ...
    return Poly(1, {(e,): Q(c) for e, c in enumerate(coeffs)})


class TestKernel:
    def test_identity_has_empty_kernel(self):
        eye = [[Q(i == j) for j in range(3)] for i in range(3)]
        assert mat_kernel(eye) == []

    def test_zero_matrix_full_kernel(self):
        zero = [[Q(0)] * 3 for _ in range(2)]
        basis = mat_kernel(zero)
        assert len(basis) == 3

    def test_rank_one_matrix(self):
        m = [[Q(1), Q(2), Q(3)], [Q(2), Q(4), Q(6)]]
        basis = mat_kernel(m)
        assert len(basis) == 2
        for v in basis:
            assert all(sum(r * x for r, x in zip(row, v)) == 0 for row in m)

    def test_empty_matrix_returns_standard_basis(self):
        basis = mat_kernel([], ncols=4)
        assert len(basis) == 4

    def test_rank_plus_kernel_is_columns(self):
        rng = random.Random(42)
        for _ in range(25):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            m = [[Q(rng.randint(-4, 4)) for _ in range(cols)] for _ in range(rows)]
            assert mat_rank(m) + len(mat_kernel(m)) == cols

    def test_kernel_vectors_annihilated(self):
        rng = random.Random(7)
        for _ in range(20):
            rows = rng.randint(2, 5)
            cols = rng.randint(2, 7)
            m = [[Q(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(cols)]
                 for _ in range(rows)]
            for v in mat_kernel(m):
                assert all(sum(r * x for r, x in zip(row, v)) == 0 for row in m)

    def test_certified_rank_agrees_with_exact(self):
        rng = random.Random(3)
        for _ in range(15):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            m = [[Q(rng.randint(-20, 20)) for _ in range(cols)] for _ in range(rows)]
            assert mat_rank_certified(m) == mat_rank(m)


class TestSmith:
    def test_e8_cartan_is_unimodular(self):
        from e8trigonal.lattice import E8_CARTAN

        assert smith_invariant_factors(E8_CARTAN) == []

    def test_diagonal(self):
        assert smith_invariant_factors([[2, 0], [0, 4]]) == [2, 4]


class TestPolyGcd:
    def test_gcd_with_zero_is_monic(self):
        f = _poly1(2, 0, 4)  # 4x^2 + 2
        g = poly_gcd(f, Poly.zero(1))
        assert g == _poly1(Q(1, 2), 0, 1)

    def test_shared_linear_factor(self):
        f = _poly1(-1, 0, 1)  # x^2 - 1
        g = _poly1(-1, 1)  # x - 1
        assert poly_gcd(f, g) == g

    def test_double_root_against_derivative(self):
        # oracle: rational root search factors x^3 - 3x + 2 = (x-1)^2 (x+2)
        f = _poly1(2, -3, 0, 1)
        roots = [Q(r) for r in (-2, 1, 1)]
        assert all(f.eval([r]) == 0 for r in roots)
        fp = _poly1(-3, 0, 3)
        assert poly_gcd(f, fp) == _poly1(-1, 1)

    def test_both_zero_raises(self):
        with pytest.raises(ValueError):
            poly_gcd(Poly.zero(1), Poly.zero(1))

    def test_gcd_divides_both(self):
        rng = random.Random(11)
        for _ in range(20):
            a = _poly1(*[rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
            b = _poly1(*[rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
            c = _poly1(*[rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
            f, g = a * c, b * c
            if f.is_zero() and g.is_zero():
                continue
            h = poly_gcd(f, g)
            sym = poly_gcd(g, f) if not (g.is_zero() and f.is_zero()) else h
            assert h == sym
            for p in (f, g):
                if p.is_zero():
                    continue
                from e8trigonal.exact.poly import (
                    uni_divmod,
                    unipoly_from_poly,
                )

                _, rem = uni_divmod(unipoly_from_poly(p), unipoly_from_poly(h))
                assert rem == []


class TestResultant:
    def test_linear_difference(self):
        # Res_x(x - a, x - b) = a - b
        f = Poly(3, {(1, 0, 0): Q(1), (0, 1, 0): Q(-1)})
        g = Poly(3, {(1, 0, 0): Q(1), (0, 0, 1): Q(-1)})
        r = resultant(f, g, 0)
        assert r == Poly(3, {(0, 1, 0): Q(1), (0, 0, 1): Q(-1)})

    def test_sylvester_two_by_two(self):
        # oracle: hand expansion of the 3x3 Sylvester determinant of
        # (x^2 - t, x) gives -t with f-rows first
        f = Poly(2, {(2, 0): Q(1), (0, 1): Q(-1)})
        g = Poly(2, {(1, 0): Q(1)})
        r = resultant(f, g, 0)
        assert r == Poly(2, {(0, 1): Q(-1)})

    def test_zero_polynomial_rejected(self):
        f = Poly(2, {(2, 0): Q(1)})
        with pytest.raises(ValueError):
            resultant(f, Poly.zero(2), 0)

    def test_vanishes_iff_common_root(self):
        rng = random.Random(5)
        for _ in range(20):
            # f = (x - a)(x - b), g = (x - c): shared root iff c in {a, b}
            a, b, c = (Q(rng.randint(-4, 4)) for _ in range(3))
            f = Poly(1, {(2,): Q(1), (1,): -(a + b), (0,): a * b})
            g = Poly(1, {(1,): Q(1), (0,): -c})
            r = resultant(f, g, 0)
            assert r.is_constant()
            assert (r.constant_value() == 0) == (c in (a, b))

    def test_shared_double_root_specialization(self):
        # cubic in w with a double root at w=1 when t=0
        w, t = Poly.var(2, 0), Poly.var(2, 1)
        one = Poly.const(2, 1)
        f = (w - one) * (w - one) * (w - one - t)
        fw = f.derivative(0)
        r = resultant(f, fw, 0)
        assert r.eval([Q(0), Q(0)]) == 0


class TestTransvectant:
    def test_zeroth_is_product(self):
        rng = random.Random(9)
        f = BinaryForm([rng.randint(-4, 4) for _ in range(4)])
        g = BinaryForm([rng.randint(-4, 4) for _ in range(3)])
        assert transvectant(f, g, 0) == f * g

    def test_first_of_self_vanishes(self):
        f = BinaryForm([1, -2, 3, 5])
        assert transvectant(f, f, 1).is_zero()

    def test_s2_t2_second(self):
        # oracle: direct omega-process differentiation gives exactly 1
        f = BinaryForm([1, 0, 0])  # s^2
        g = BinaryForm([0, 0, 1])  # t^2
        r = transvectant(f, g, 2)
        assert r.degree == 0 and r.coeffs[0] == Q(1)

    def test_out_of_range_index(self):
        f = BinaryForm([1, 0, 0])
        with pytest.raises(ValueError):
            transvectant(f, f, 3)

    def test_bilinearity(self):
        rng = random.Random(21)
        for _ in range(10):
            d1, d2, k = 4, 3, rng.randint(0, 3)
            f1 = BinaryForm([rng.randint(-3, 3) for _ in range(d1 + 1)])
            f2 = BinaryForm([rng.randint(-3, 3) for _ in range(d1 + 1)])
            g = BinaryForm([rng.randint(-3, 3) for _ in range(d2 + 1)])
            a, b = Q(rng.randint(1, 5)), Q(rng.randint(-5, -1))
            lhs = transvectant(f1.scale(a) + f2.scale(b), g, k)
            rhs = transvectant(f1, g, k).scale(a) + transvectant(f2, g, k).scale(b)
            assert lhs == rhs


class TestBinaryForms:
    def test_gcd_handles_root_at_infinity(self):
        # both divisible by t: s^2 t and s t^2
        f = BinaryForm([0, 1, 0, 0])  # s^2 t
        g = BinaryForm([0, 0, 1, 0])  # s t^2
        h = bf_gcd(f, g)
        assert h.degree == 2  # s t
        assert h.eval(1, 0) == 0 and h.eval(0, 1) == 0

    def test_root_multiplicity(self):
        lin = BinaryForm([1, -2])  # s - 2t, root (2:1)
        f = lin * lin * BinaryForm([1, 1])
        assert root_multiplicity(f, 2, 1) == 2
        assert root_multiplicity(f, -1, 1) == 1
        assert root_multiplicity(f, 5, 1) == 0

    def test_squarefree_decomposition(self):
        a = BinaryForm([1, -1])  # s - t
        b = BinaryForm([1, 1])  # s + t
        t = BinaryForm([0, 1])  # t
        f = a * a * b * t * t * t
        parts = squarefree_decomposition(f)
        mults = sorted(m for _, m in parts)
        assert mults == [1, 2, 3]
        for g, m in parts:
            if m == 1:
                assert g.eval(-1, 1) == 0
            if m == 2:
                assert g.eval(1, 1) == 0
            if m == 3:
                assert g.eval(1, 0) == 0

    def test_substitution_degree_preserved(self):
        rng = random.Random(17)
        f = BinaryForm([rng.randint(-5, 5) for _ in range(7)])
        g = f.substitute([[1, 2], [3, 7]])
        assert g.degree == f.degree
        # substitution is evaluation-compatible
        s, t = Q(2), Q(-3)
        assert g.eval(s, t) == f.eval(s + 2 * t, 3 * s + 7 * t)
