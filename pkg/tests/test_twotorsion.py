"""Two-torsion quotient, quadratic form, extension group."""

import random
from itertools import product

from e8trigonal import lattice as lat
from e8trigonal import twotorsion as tt


def _vsum(v, w):
    return tuple((a + b) % 2 for a, b in zip(v, w))


class TestQForm:
    def test_roots_have_q_one(self):
        for r in lat.enumerate_roots()[::17]:
            assert tt.qform(tt.reduce_vector(r)) == 1

    def test_zero(self):
        assert tt.qform((0,) * 8) == 0

    def test_counts(self):
        vals = [tt.qform(v) for v in tt.all_vectors()]
        assert vals.count(0) == 136
        assert vals.count(1) == 120

    def test_lift_independence(self):
        rng = random.Random(0)
        for _ in range(20):
            coeffs = [rng.randint(-3, 3) for _ in range(8)]
            v = lat.L  # placeholder, rebuilt below
            x = (0,) * 9
            for c, s in zip(coeffs, lat.SIMPLE_ROOTS):
                x = lat.add(x, tuple(c * si for si in s))
            half = lat.inner_product(x, x) // 2
            assert tt.qform(tt.reduce_vector(x)) == half % 2

    def test_root_pair_coincidence(self):
        # q = 1 locus size equals the number of root pairs
        assert 120 == len(lat.enumerate_roots()) // 2


class TestPairing:
    def test_alternating(self):
        for v in tt.all_vectors()[::13]:
            assert tt.pairing2(v, v) == 0

    def test_polarization_exhaustive(self):
        vs = tt.all_vectors()
        for v in vs:
            qv = tt.qform(v)
            for w in vs:
                lhs = (tt.qform(_vsum(v, w)) + qv + tt.qform(w)) % 2
                assert lhs == tt.pairing2(v, w)

    def test_adjacent_simple_roots_pair_to_one(self):
        a = tt.reduce_vector(lat.sub(lat.E[0], lat.E[1]))
        b = tt.reduce_vector(lat.sub(lat.E[1], lat.E[2]))
        assert tt.pairing2(a, b) == 1


class TestGamma:
    def test_rank_eight(self):
        assert tt.gamma_rank() == 8

    def test_kernel_trivial(self):
        # rank 8 forces a trivial kernel and image of size 256
        assert 2 ** tt.gamma_rank() == 256


class TestExtension:
    def test_group_order(self):
        assert len(tt.all_elements()) == 512

    def test_identity_neutral(self):
        e = tt.IDENTITY
        for a in tt.all_elements()[::29]:
            assert tt.tilde_mul(e, a) == a
            assert tt.tilde_mul(a, e) == a

    def test_square_law_exhaustive(self):
        for v in tt.all_vectors():
            a = tt.TildeElement(1, v)
            sq = tt.tilde_mul(a, a)
            assert sq.v == (0,) * 8
            assert sq.sign == (-1) ** tt.qform(v)

    def test_commutator_law(self):
        rng = random.Random(1)
        for _ in range(200):
            v = tuple(rng.randint(0, 1) for _ in range(8))
            w = tuple(rng.randint(0, 1) for _ in range(8))
            a, b = tt.TildeElement(1, v), tt.TildeElement(1, w)
            c = tt.tilde_mul(
                tt.tilde_mul(a, b), tt.tilde_mul(tt.tilde_inv(a), tt.tilde_inv(b))
            )
            assert c.v == (0,) * 8
            assert c.sign == (-1) ** tt.pairing2(v, w)

    def test_associativity_sampled(self):
        rng = random.Random(2)
        els = tt.all_elements()
        for _ in range(300):
            a, b, c = (els[rng.randrange(512)] for _ in range(3))
            assert tt.tilde_mul(tt.tilde_mul(a, b), c) == tt.tilde_mul(
                a, tt.tilde_mul(b, c)
            )

    def test_inverse(self):
        rng = random.Random(3)
        els = tt.all_elements()
        for _ in range(60):
            a = els[rng.randrange(512)]
            assert tt.tilde_mul(a, tt.tilde_inv(a)) == tt.IDENTITY


class TestChiQ:
    def test_identity_value(self):
        assert tt.chi_q(tt.IDENTITY) == 1

    def test_central_element(self):
        # value computed from the realized law: the sign coordinate of
        # (-1, 0) is not absorbed by q, so the map takes it to -1
        assert tt.chi_q(tt.TildeElement(-1, (0,) * 8)) == -1

    def test_kernel_size(self):
        ker = [a for a in tt.all_elements() if tt.chi_q(a) == 1]
        assert len(ker) == 256

    def test_kernel_one_lift_per_class(self):
        ker = [a for a in tt.all_elements() if tt.chi_q(a) == 1]
        classes = {a.v for a in ker}
        assert len(classes) == 256
        for a in ker:
            assert a.sign == (-1) ** tt.qform(a.v)


class TestAmbientCharacter:
    """The square-times-sign character on the order-1024 extension whose
    kernel is the realized 512-element group."""

    def test_multiplicative(self):
        rng = random.Random(4)
        els = tt.ambient_elements()
        for _ in range(300):
            a, b = els[rng.randrange(1024)], els[rng.randrange(1024)]
            assert tt.ambient_chi_q(tt.ambient_mul(a, b)) == tt.ambient_chi_q(
                a
            ) * tt.ambient_chi_q(b)

    def test_kernel_is_the_extension(self):
        ker = [a for a in tt.ambient_elements() if tt.ambient_chi_q(a) == 1]
        assert len(ker) == 512
        assert {k for k, _ in ker} == {0, 2}  # central parts +-1 only
