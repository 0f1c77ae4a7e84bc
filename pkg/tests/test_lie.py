"""Chevalley e8: brackets, involution, centralizers, realization map."""

import random
from fractions import Fraction as Q

import pytest

from e8trigonal import lattice, lie


class TestBasis:
    def test_dimension(self):
        assert lie.DIM == 248
        assert len(lie.bourbaki_roots()) == 240

    def test_integral_count(self):
        assert sum(1 for r in lie.bourbaki_roots() if lie.is_integral(r)) == 112

    def test_root_norms(self):
        for r in lie.bourbaki_roots()[::23]:
            assert lie.dot(r, r) == 2

    def test_eps_is_minus_one_on_diagonal(self):
        rng = random.Random(0)
        for _ in range(20):
            i = rng.randrange(240)
            assert lie.eps(i, i) == -1

    def test_eps_antisymmetry_compatibility(self):
        roots = lie.bourbaki_roots()
        rng = random.Random(1)
        for _ in range(40):
            i, j = rng.randrange(240), rng.randrange(240)
            pairing = lie.dot(roots[i], roots[j])
            assert lie.eps(i, j) * lie.eps(j, i) == (-1) ** int(pairing)


class TestBracket:
    def test_antisymmetry_on_elements(self):
        rng = random.Random(2)
        for _ in range(10):
            x = lie.LieElement.from_dict(
                {rng.randrange(248): Q(rng.randint(-3, 3)) for _ in range(4)}
            )
            assert lie.bracket(x, x).is_zero()

    def test_cartan_acts_diagonally(self):
        rng = random.Random(3)
        coeffs = [rng.randint(-4, 4) for _ in range(8)]
        t = lie.cartan_element(coeffs)
        for r in (0, 57, 139, 211):
            xa = lie.root_vector(r)
            out = lie.bracket(t, xa)
            expected = xa.scale(lie.root_value(r, coeffs))
            assert out == expected

    def test_root_sum_rule(self):
        roots = lie.bourbaki_roots()
        index = {r: i for i, r in enumerate(roots)}
        rng = random.Random(4)
        found = 0
        while found < 10:
            i, j = rng.randrange(240), rng.randrange(240)
            total = tuple(a + b for a, b in zip(roots[i], roots[j]))
            if total in index:
                out = lie.bracket(lie.root_vector(i), lie.root_vector(j))
                assert out == lie.root_vector(index[total]).scale(lie.eps(i, j))
                found += 1

    def test_opposite_roots_give_cartan(self):
        roots = lie.bourbaki_roots()
        index = {r: i for i, r in enumerate(roots)}
        i = 11
        j = index[tuple(-c for c in roots[i])]
        out = lie.bracket(lie.root_vector(i), lie.root_vector(j))
        assert not out.is_zero()
        assert all(k < 8 for k, _ in out.coords)  # lands in the Cartan

    def test_jacobi_sampled(self):
        report = lie.jacobi_check("sampled", seed=123, samples=4000)
        assert report["violations"] == 0

    def test_jacobi_cartan_triples(self):
        h1 = lie.cartan_element([1, 0, 2, 0, 0, 1, 0, 0])
        h2 = lie.cartan_element([0, 3, 0, 0, 1, 0, 0, 2])
        assert lie.bracket(h1, h2).is_zero()


class TestTheta:
    def test_trace(self):
        assert lie.theta_trace() == -8

    def test_eigenspace_dims(self):
        assert lie.theta_eigenspace_dims() == (120, 128)

    def test_involution(self):
        rng = random.Random(5)
        for _ in range(10):
            x = lie.LieElement.from_dict(
                {rng.randrange(248): Q(rng.randint(-3, 3)) for _ in range(5)}
            )
            assert lie.theta_map(lie.theta_map(x)) == x

    def test_automorphism_all_pairs(self):
        assert lie.theta_is_automorphism()

    def test_fixed_type_d8(self):
        assert lie.fixed_subalgebra_type() == "D8"

    def test_minus_space_is_module(self):
        # [fixed, anti] stays in the anti eigenspace
        signs = lie.theta_signs()
        rng = random.Random(6)
        plus = [i for i, s in enumerate(signs) if s == 1]
        minus = [i for i, s in enumerate(signs) if s == -1]
        for _ in range(30):
            i, j = rng.choice(plus), rng.choice(minus)
            for k, _c in lie.bracket_basis(i, j):
                assert signs[k] == -1


class TestCentralizer:
    def test_zero_element(self):
        assert lie.centralizer_dim(lie.LieElement.from_dict({})) == 248

    def test_regular_cartan(self):
        chi = lattice.Character("add", tuple(Q(v) for v in (1, 2, 4, 8, 16, 32, 64, 128)))
        assert lattice.is_regular_semisimple(chi)
        x = lie.cartan_of_additive_character(chi)
        assert lie.centralizer_dim(x) == 8

    def test_root_vector_golden(self):
        # golden value recorded from the exact rank computation
        assert lie.centralizer_dim(lie.root_vector(0)) == 190

    def test_matches_rss_equivalence(self):
        rng = random.Random(7)
        rss_seen = nonrss_seen = 0
        while rss_seen < 3 or nonrss_seen < 2:
            vals = tuple(Q(rng.randint(0, 12)) for _ in range(8))
            try:
                chi = lattice.Character("add", vals)
            except ValueError:
                continue
            x = lie.cartan_of_additive_character(chi)
            dim = lie.centralizer_dim(x)
            if lattice.is_regular_semisimple(chi):
                assert dim == 8
                rss_seen += 1
            else:
                assert dim > 8
                nonrss_seen += 1


class TestIsometry:
    def test_bijective_on_roots(self):
        _, phi = lie.realization_isometry()
        picset = set(lattice.enumerate_roots())
        images = set()
        for r in lie.bourbaki_roots():
            img = phi(tuple(Q(c, 2) for c in r))
            assert all(v.denominator == 1 for v in img)
            images.add(tuple(int(v) for v in img))
        assert images == picset

    def test_pairing_negated(self):
        _, phi = lie.realization_isometry()
        roots = lie.bourbaki_roots()
        rng = random.Random(8)
        for _ in range(40):
            a, b = roots[rng.randrange(240)], roots[rng.randrange(240)]
            ia = tuple(int(v) for v in phi(tuple(Q(c, 2) for c in a)))
            ib = tuple(int(v) for v in phi(tuple(Q(c, 2) for c in b)))
            assert lattice.inner_product(ia, ib) == -lie.dot(a, b)

    def test_integral_d8_matches_even_line_degree(self):
        _, phi = lie.realization_isometry()
        images = []
        for r in lie.bourbaki_roots():
            if lie.is_integral(r):
                img = phi(tuple(Q(c, 2) for c in r))
                images.append(tuple(int(v) for v in img))
        assert all(v[0] % 2 == 0 for v in images)
        assert lattice.dynkin_type(images) == "D8"

    def test_character_transport_roundtrip(self):
        rng = random.Random(9)
        vals = tuple(Q(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(8))
        chi = lattice.Character("add", vals)
        x = lie.cartan_of_additive_character(chi)
        coeffs = [Q(0)] * 8
        for i, c in x.coords:
            coeffs[i] = c
        assert lie.additive_character_of_cartan(coeffs) == chi
