"""Picard lattice, roots, Weyl reflections, characters."""

import random
from fractions import Fraction as Q
from itertools import combinations, product

import pytest

from e8trigonal import lattice as lat


def brute_force_roots():
    """Independent oracle: enumerate the four coefficient shapes and check
    the defining equations directly."""
    roots = set()
    # e_i - e_j
    for i, j in product(range(8), repeat=2):
        if i != j:
            roots.add(lat.sub(lat.E[i], lat.E[j]))
    # +-(l - e_i - e_j - e_k)
    for t in combinations(range(8), 3):
        v = (1, *[-1 if k in t else 0 for k in range(8)])
        roots.add(v)
        roots.add(lat.neg(v))
    # +-(2l - six e's)
    for t in combinations(range(8), 6):
        v = (2, *[-1 if k in t else 0 for k in range(8)])
        roots.add(v)
        roots.add(lat.neg(v))
    # +-(3l - seven e's - 2 e)
    for dbl in range(8):
        v = (3, *[-2 if k == dbl else -1 for k in range(8)])
        roots.add(v)
        roots.add(lat.neg(v))
    for v in roots:
        assert lat.inner_product(v, v) == -2
        assert lat.inner_product(v, lat.K_S) == 0
    return roots


class TestPairing:
    def test_basis_values(self):
        assert lat.inner_product(lat.L, lat.L) == 1
        for i in range(8):
            for j in range(8):
                expected = -1 if i == j else 0
                assert lat.inner_product(lat.E[i], lat.E[j]) == expected
            assert lat.inner_product(lat.L, lat.E[i]) == 0

    def test_canonical_class_norm(self):
        assert lat.inner_product(lat.K_S, lat.K_S) == 1

    def test_line_root_norm(self):
        v = (1, -1, -1, -1, 0, 0, 0, 0, 0)
        assert lat.inner_product(v, v) == -2

    def test_bilinear_symmetric(self):
        rng = random.Random(0)
        for _ in range(20):
            x, y, z = (tuple(rng.randint(-4, 4) for _ in range(9)) for _ in range(3))
            assert lat.inner_product(x, y) == lat.inner_product(y, x)
            assert lat.inner_product(lat.add(x, y), z) == lat.inner_product(
                x, z
            ) + lat.inner_product(y, z)


class TestRoots:
    def test_count_and_oracle_agreement(self):
        roots = set(lat.enumerate_roots())
        assert len(roots) == 240
        assert roots == brute_force_roots()

    def test_closed_under_negation(self):
        roots = set(lat.enumerate_roots())
        assert all(lat.neg(r) in roots for r in roots)

    def test_contains_simple_system(self):
        roots = set(lat.enumerate_roots())
        assert all(s in roots for s in lat.SIMPLE_ROOTS)

    def test_exceptional_differences_count(self):
        zero_cl = [r for r in lat.enumerate_roots() if r[0] == 0]
        assert len(zero_cl) == 56  # the e_i - e_j family

    def test_even_line_degree_subsystem(self):
        even = [r for r in lat.enumerate_roots() if r[0] % 2 == 0]
        assert len(even) == 112
        assert lat.dynkin_type(even) == "D8"

    def test_orthogonal_complement_of_root_is_e7(self):
        alpha = lat.enumerate_roots()[0]
        orth = [b for b in lat.enumerate_roots() if lat.inner_product(alpha, b) == 0]
        assert len(orth) == 126
        assert lat.dynkin_type(orth) == "E7"

    def test_stability_under_simple_reflections(self):
        roots = set(lat.enumerate_roots())
        for s in lat.SIMPLE_ROOTS:
            assert {lat.reflect(r, s) for r in roots} == roots

    def test_cartan_matrix(self):
        expected = {
            (i, i): 2 for i in range(8)
        }
        chain = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]
        for i, j in chain:
            expected[(i, j)] = expected[(j, i)] = -1
        for i in range(8):
            for j in range(8):
                assert lat.E8_CARTAN[i][j] == expected.get((i, j), 0)


class TestReflections:
    def test_root_to_minus_root(self):
        roots = lat.enumerate_roots()
        idx = lat.root_index()
        for r in list(roots)[::40]:
            assert lat.reflect(r, r) == lat.neg(r)

    def test_fixes_orthogonal_vectors(self):
        roots = lat.enumerate_roots()
        rng = random.Random(1)
        for _ in range(30):
            a = roots[rng.randrange(240)]
            x = tuple(rng.randint(-5, 5) for _ in range(9))
            if lat.inner_product(x, a) == 0:
                assert lat.reflect(x, a) == x

    def test_involution(self):
        roots = lat.enumerate_roots()
        rng = random.Random(2)
        for _ in range(30):
            i = rng.randrange(240)
            x = tuple(rng.randint(-9, 9) for _ in range(9))
            assert lat.reflect_word([i, i], x) == x

    def test_isometry(self):
        rng = random.Random(3)
        for _ in range(30):
            i = rng.randrange(240)
            x = tuple(rng.randint(-9, 9) for _ in range(9))
            y = tuple(rng.randint(-9, 9) for _ in range(9))
            assert lat.inner_product(
                lat.reflect_word([i], x), lat.reflect_word([i], y)
            ) == lat.inner_product(x, y)

    def test_bad_index(self):
        with pytest.raises(IndexError):
            lat.reflect_word([240], lat.L)


class TestDynkinClassifier:
    def test_full_system_is_e8(self):
        assert lat.dynkin_type(lat.enumerate_roots()) == "E8"

    def test_single_pair_is_a1(self):
        a = lat.sub(lat.E[0], lat.E[1])
        assert lat.dynkin_type([a, lat.neg(a)]) == "A1"

    def test_garbage_rejected(self):
        from e8trigonal.dynkin import DiagramError

        with pytest.raises(DiagramError):
            lat.dynkin_type([lat.sub(lat.E[0], lat.E[1])])  # not negation-closed


def _mult_char(values):
    return lat.Character("mult", tuple(Q(v) for v in values))


def _add_char(values):
    return lat.Character("add", tuple(Q(v) for v in values))


class TestCharacters:
    def test_zero_vector_values(self):
        chi = _mult_char([2, 3, 5, 7, 11, 13, 17, 19])
        zero = (0,) * 9
        assert lat.eval_character(chi, zero) == 1
        x = _add_char([1, 2, 3, 4, 5, 6, 7, 8])
        assert lat.eval_character(x, zero) == 0

    def test_inverse_value(self):
        chi = _mult_char([2, 3, 5, 7, 11, 13, 17, 19])
        v = lat.SIMPLE_ROOTS[3]
        assert lat.eval_character(chi, lat.neg(v)) == 1 / lat.eval_character(chi, v)

    def test_homomorphism_on_sum(self):
        chi = _mult_char([2] * 8)
        v = lat.sub(lat.E[0], lat.E[2])  # b1 + b2
        assert lat.eval_character(chi, v) == 4

    def test_rejects_vector_off_lattice(self):
        chi = _mult_char([2] * 8)
        with pytest.raises(ValueError):
            lat.eval_character(chi, lat.L)

    def test_rejects_zero_multiplicative_value(self):
        with pytest.raises(ValueError):
            _mult_char([0, 1, 1, 1, 1, 1, 1, 1])

    def test_rss_detects_root_hyperplane(self):
        # chi(e1 - e2) = 1
        chi = _mult_char([1, 3, 5, 7, 11, 13, 17, 19])
        assert not lat.is_regular_semisimple(chi)

    def test_zero_additive_not_rss(self):
        x = _add_char([0] * 8)
        assert not lat.is_regular_semisimple(x)

    def test_prime_character_is_rss(self):
        # golden value: brute evaluation over all 240 roots
        chi = _mult_char([2, 3, 5, 7, 11, 13, 17, 19])
        assert lat.is_regular_semisimple(chi) is True

    def test_discriminant_zero_iff_not_rss(self):
        rng = random.Random(4)
        for _ in range(8):
            vals = [Q(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(8)]
            chi = _mult_char(vals)
            assert (lat.discriminant(chi) != 0) == lat.is_regular_semisimple(chi)

    def test_discriminant_reflection_invariant(self):
        chi = _mult_char([2, 3, 5, 7, 11, 13, 17, 19])
        rng = random.Random(5)
        for _ in range(3):
            w = [rng.randrange(240)]
            assert lat.discriminant(lat.character_reflect(chi, w)) == lat.discriminant(chi)

    def test_hyperplane_character_discriminant_zero(self):
        chi = _mult_char([1, 3, 5, 7, 11, 13, 17, 19])
        assert lat.discriminant(chi) == 0


class TestRootValueMultiset:
    def test_cardinality(self):
        chi = _mult_char([2, 3, 5, 7, 11, 13, 17, 19])
        assert len(lat.root_value_multiset(chi)) == 240

    def test_reflection_invariance(self):
        chi = _mult_char([2, 3, 5, 7, 11, 13, 17, 19])
        rng = random.Random(6)
        for _ in range(4):
            w = [rng.randrange(240)]
            assert lat.root_value_multiset(
                lat.character_reflect(chi, w)
            ) == lat.root_value_multiset(chi)

    def test_contains_inverse_pairs(self):
        chi = _mult_char([2, 3, 5, 7, 11, 13, 17, 19])
        ms = list(lat.root_value_multiset(chi))
        for v in set(ms):
            assert ms.count(v) == ms.count(1 / v)


class TestSerialization:
    def test_roundtrip(self):
        from e8trigonal import records

        chi = _mult_char([2, Q(1, 3), 5, 7, 11, 13, 17, 19])
        d = records.character_to_dict(chi)
        assert d["values"][1] == "1/3"
        assert records.character_from_dict(d) == chi

    def test_mode_validation(self):
        from e8trigonal import records

        with pytest.raises(ValueError):
            records.character_from_dict({"mode": "weird", "values": ["1"] * 8})
        with pytest.raises(ValueError):
            records.character_from_dict({"mode": "mult", "values": ["1"] * 7})
