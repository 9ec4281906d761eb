import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

import trigen as tg
from trigen.numberfield import INFINITE


class TestFieldNew:
    def test_signatures(self, k_sqrt2, k_gauss, k_phi10, k_zeta8, k_biquad,
                        k_rationals):
        assert k_sqrt2.signature == (2, 0)
        assert k_gauss.signature == (0, 1)
        assert k_phi10.signature == (0, 2)
        assert k_zeta8.signature == (0, 2)
        assert k_biquad.signature == (4, 0)
        assert k_rationals.signature == (1, 0)

    def test_signature_identity_r1_plus_2r2(self, k_sqrt2, k_gauss, k_phi10,
                                            k_zeta8, k_biquad, k_rationals):
        for f in (k_sqrt2, k_gauss, k_phi10, k_zeta8, k_biquad, k_rationals):
            r1, r2 = f.signature
            assert r1 + 2 * r2 == f.degree

    def test_reducible_rejected(self):
        with pytest.raises(ValueError, match="reducible"):
            tg.field_new([-1, 0, 1])
        with pytest.raises(ValueError, match="reducible"):
            tg.field_new([4, 0, 0, 0, 1])

    def test_monic_required(self):
        with pytest.raises(ValueError, match="monic"):
            tg.field_new([1, 0, 2])

    def test_singular_basis_rejected(self):
        with pytest.raises(ValueError, match="singular"):
            tg.field_new([-2, 0, 1], integral_basis=[["1", "0"], ["1", "0"]])

    def test_basis_first_row_must_be_one(self):
        with pytest.raises(ValueError, match="first"):
            tg.field_new([-2, 0, 1], integral_basis=[["0", "1"], ["1", "0"]])

    def test_degree_above_four_flagged(self):
        f = tg.field_new([2, 0, 0, 0, 0, 1])  # x^5 + 2, Eisenstein
        assert f.irreducibility_checked is False
        assert tg.field_new([-2, 0, 1]).irreducibility_checked is True

    def test_discriminants(self, k_sqrt2, k_sqrt5_maximal, k_rationals):
        assert k_sqrt2.discriminant == 8
        assert k_sqrt5_maximal.discriminant == 5  # 20 / 2^2
        assert k_rationals.discriminant == 1


class TestElemArith:
    def test_difference_of_squares(self, k_sqrt2):
        s = k_sqrt2.gen()
        a = k_sqrt2.one() + s
        b = s - 1
        assert tg.elem_arith(a, b, "mul") == k_sqrt2.one()

    def test_inverse_by_ext_gcd(self, k_sqrt2):
        s = k_sqrt2.gen()
        a = k_sqrt2.one() + s
        assert tg.elem_arith(k_sqrt2.one(), a, "div") == s - 1

    def test_additive_identity(self, k_sqrt2):
        a = k_sqrt2.element([3, 5])
        assert tg.elem_arith(a, k_sqrt2.zero(), "add") == a

    def test_division_by_zero(self, k_sqrt2):
        with pytest.raises(ZeroDivisionError):
            tg.elem_arith(k_sqrt2.one(), k_sqrt2.zero(), "div")

    def test_parent_mismatch(self, k_sqrt2, k_sqrt3):
        with pytest.raises(ValueError, match="mismatch"):
            tg.elem_arith(k_sqrt2.one(), k_sqrt3.one(), "add")

    def test_inverse_law_random(self, k_zeta8):
        rng = random.Random(3)
        for _ in range(30):
            a = k_zeta8.element([rng.randint(-5, 5) for _ in range(4)])
            if not a:
                continue
            assert a * a.inverse() == k_zeta8.one()

    def test_norm_is_resultant(self, k_sqrt2):
        s = k_sqrt2.gen()
        assert (k_sqrt2.one() + s).norm() == -1   # (1+s)(1-s) = -1
        assert (k_sqrt2.from_rational(3) + s).norm() == 7


class TestMinimalPolynomial:
    def test_unit(self, k_sqrt2):
        a = k_sqrt2.one() + k_sqrt2.gen()
        assert tg.minimal_polynomial(a) == [Fraction(-1), Fraction(-2), Fraction(1)]

    def test_rational(self, k_sqrt2):
        assert tg.minimal_polynomial(k_sqrt2.from_rational(2)) == \
            [Fraction(-2), Fraction(1)]

    def test_generator(self, k_sqrt2):
        assert tg.minimal_polynomial(k_sqrt2.gen()) == \
            [Fraction(-2), Fraction(0), Fraction(1)]

    def test_root_annihilates(self, k_zeta8):
        rng = random.Random(9)
        for _ in range(10):
            a = k_zeta8.element([rng.randint(-3, 3) for _ in range(4)])
            p = tg.minimal_polynomial(a)
            value = k_zeta8.zero()
            power = k_zeta8.one()
            for c in p:
                value = value + power * c
                power = power * a
            assert not value
            assert k_zeta8.degree % (len(p) - 1) == 0

    def test_sympy_oracle(self, k_zeta8):
        # minpoly(zeta8 + zeta8^-1) = x^2 - 2 via an independent CAS
        a = k_zeta8.element([0, 1, 0, -1])
        ours = tg.minimal_polynomial(a)
        x = sympy.symbols("x")
        zeta = sympy.exp(sympy.I * sympy.pi / 4)
        theirs = sympy.minimal_polynomial(zeta + 1 / zeta, x)
        assert sum(int(c) * x ** i for i, c in enumerate(ours)) - theirs == 0


class TestSubringIndex:
    def test_fundamental_unit_power_one(self, k_sqrt2):
        theta = k_sqrt2.one() + k_sqrt2.gen()
        assert tg.subring_index(theta, 1) == 1

    def test_rational_theta_infinite(self, k_sqrt2):
        assert tg.subring_index(k_sqrt2.from_rational(3), 1) is INFINITE

    def test_power_two_det_oracle(self, k_sqrt2):
        theta = k_sqrt2.one() + k_sqrt2.gen()
        # theta^2 = 3 + 2*sqrt2; coordinate matrix [[1,0],[3,2]]
        assert (theta ** 2).coords == (Fraction(3), Fraction(2))
        expected = abs(sympy.Matrix([[1, 0], [3, 2]]).det())
        assert tg.subring_index(theta, 2) == expected == 2

    def test_indices_match_sympy_det(self, k_sqrt2):
        theta = k_sqrt2.one() + k_sqrt2.gen()
        for r in range(1, 8):
            beta = theta ** r
            rows = [[1, 0], [int(beta.coords[0]), int(beta.coords[1])]]
            assert tg.subring_index(theta, r) == abs(sympy.Matrix(rows).det())

    def test_infinite_iff_minpoly_degenerates(self, k_zeta8):
        # the two code paths must agree
        rng = random.Random(4)
        for _ in range(12):
            a = k_zeta8.element([rng.randint(-2, 2) for _ in range(4)])
            if not a or not a.is_integral():
                continue
            deg = len(tg.minimal_polynomial(a)) - 1
            idx = tg.subring_index(a, 1)
            assert (idx is INFINITE) == (deg < k_zeta8.degree)

    def test_non_integral_rejected(self, k_sqrt2):
        with pytest.raises(ValueError, match="integral"):
            tg.subring_index(k_sqrt2.element(["1/2", "0"]), 1)


class TestUnitRank:
    def test_paper_values(self, k_sqrt2, k_gauss, k_phi10):
        assert tg.unit_rank(k_sqrt2) == 1
        assert tg.unit_rank(k_gauss) == 0
        assert tg.unit_rank(k_phi10) == 1

    def test_more_fields(self, k_zeta8, k_biquad, k_rationals):
        assert tg.unit_rank(k_zeta8) == 1
        assert tg.unit_rank(k_biquad) == 3
        assert tg.unit_rank(k_rationals) == 0


class TestIsCmField:
    def test_zeta8_over_sqrt2(self, k_zeta8):
        sub = tg.field_new([-2, 0, 1])
        emb = k_zeta8.element([0, 1, 0, -1])
        assert tg.is_cm_field(k_zeta8, sub, emb) is True

    def test_real_quadratic_not_cm(self, k_sqrt2, k_rationals):
        assert tg.is_cm_field(k_sqrt2, k_rationals, k_sqrt2.one()) is False

    def test_totally_real_biquadratic_not_cm(self, k_biquad, k_sqrt2):
        emb = k_biquad.element([0, 1])  # arbitrary data; signature rules it out
        assert tg.is_cm_field(k_biquad, k_sqrt2, emb) is False

    def test_degree_mismatch_raises(self, k_zeta8, k_rationals):
        with pytest.raises(ValueError, match="degree"):
            tg.is_cm_field(k_zeta8, k_rationals, k_zeta8.one())

    def test_wrong_embedding_rejected(self, k_zeta8):
        sub = tg.field_new([-3, 0, 1])
        emb = k_zeta8.element([0, 1, 0, -1])  # satisfies x^2-2, not x^2-3
        assert tg.is_cm_field(k_zeta8, sub, emb) is False


class TestTotallyPositive:
    def test_rational_two(self, k_sqrt2):
        assert tg.totally_positive(k_sqrt2.from_rational(2)) is True

    def test_sqrt2_itself(self, k_sqrt2):
        assert tg.totally_positive(k_sqrt2.gen()) is False

    def test_three_plus_sqrt2(self, k_sqrt2):
        a = k_sqrt2.from_rational(3) + k_sqrt2.gen()
        assert tg.totally_positive(a) is True

    def test_squares_always_positive(self, k_biquad):
        rng = random.Random(12)
        for _ in range(15):
            a = k_biquad.element([rng.randint(-3, 3) for _ in range(4)])
            if not a:
                continue
            assert tg.totally_positive(a * a) is True

    def test_float_embedding_oracle(self, k_biquad):
        roots = [r.real for r in np.roots([1, 0, -10, 0, 1])]
        rng = random.Random(13)
        for _ in range(20):
            coords = [rng.randint(-4, 4) for _ in range(4)]
            a = k_biquad.element(coords)
            if not a:
                continue
            floats = [sum(c * r ** i for i, c in enumerate(coords))
                      for r in roots]
            if min(abs(v) for v in floats) < 1e-6:
                continue
            assert tg.totally_positive(a) == all(v > 0 for v in floats)

    def test_errors(self, k_sqrt2, k_gauss):
        with pytest.raises(ValueError, match="totally real"):
            tg.totally_positive(k_gauss.one())
        with pytest.raises(ValueError, match="zero"):
            tg.totally_positive(k_sqrt2.zero())


class TestIntegrality:
    def test_half_golden_integral_only_in_maximal(self, k_sqrt5_maximal):
        half = k_sqrt5_maximal.element(["1/2", "1/2"])
        assert half.is_integral() is True
        power_basis = tg.field_new([-5, 0, 1])
        assert power_basis.element(["1/2", "1/2"]).is_integral() is False

    def test_integral_coords_roundtrip(self, k_sqrt5_maximal):
        a = k_sqrt5_maximal.from_integral_coords([2, -3])
        assert a.integral_coords() == (Fraction(2), Fraction(-3))


class TestSubfieldEmbedding:
    def test_lift_and_project(self, k_zeta8, zeta8_subfield):
        emb = zeta8_subfield
        f_elem = emb.sub.element([1, 2])  # 1 + 2 sqrt2
        lifted = emb.lift(f_elem)
        assert emb.contains(lifted)
        assert emb.to_sub(lifted) == f_elem

    def test_non_member_detected(self, k_zeta8, zeta8_subfield):
        assert zeta8_subfield.contains(k_zeta8.gen()) is False
        with pytest.raises(ValueError, match="does not lie"):
            zeta8_subfield.to_sub(k_zeta8.gen())

    def test_bad_image_rejected(self, k_zeta8):
        sub = tg.field_new([-2, 0, 1])
        with pytest.raises(ValueError, match="does not satisfy"):
            tg.SubfieldEmbedding(sub, k_zeta8, k_zeta8.gen())


class TestAutomorphism:
    def test_quadratic_conjugation(self, k_sqrt2):
        conj = tg.FieldAutomorphism.quadratic_conjugation(k_sqrt2)
        s = k_sqrt2.gen()
        assert conj(s) == -s
        assert conj(k_sqrt2.one() + s) == k_sqrt2.one() - s
        assert conj.is_involution()

    def test_non_root_image_rejected(self, k_sqrt2):
        with pytest.raises(ValueError, match="not a root"):
            tg.FieldAutomorphism(k_sqrt2, k_sqrt2.one())
