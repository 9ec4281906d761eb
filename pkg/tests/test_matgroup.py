import random
from fractions import Fraction

import pytest

import trigen as tg
from trigen.matgroup import MatN, Word


def random_sl2_word(field, rng, gens, max_len=8):
    m = MatN.identity(field, 2)
    for _ in range(rng.randint(1, max_len)):
        name = rng.choice(list(gens))
        m = m * (gens[name] ** rng.randint(-2, 2))
    return m


@pytest.fixture()
def sqrt2_gens(k_sqrt2, theta_sqrt2):
    return {
        "u+": tg.upper_elementary(k_sqrt2, 1),
        "u-": tg.lower_elementary(k_sqrt2, 1),
        "h": tg.torus_diag(k_sqrt2, theta_sqrt2.theta),
    }


class TestMatN:
    def test_det_one_constructor(self, k_sqrt2):
        with pytest.raises(ValueError, match="determinant"):
            MatN.sl(k_sqrt2, [[2, 0], [0, 2]])
        MatN.sl(k_sqrt2, [[1, 5], [0, 1]])

    def test_inverse(self, k_sqrt2, sqrt2_gens):
        rng = random.Random(21)
        for _ in range(10):
            m = random_sl2_word(k_sqrt2, rng, sqrt2_gens)
            assert m * m.inverse() == MatN.identity(k_sqrt2, 2)

    def test_det_multiplicative(self, k_sqrt2):
        rng = random.Random(22)
        for _ in range(10):
            a = MatN(k_sqrt2, [[rng.randint(-3, 3) for _ in range(2)]
                               for _ in range(2)])
            b = MatN(k_sqrt2, [[rng.randint(-3, 3) for _ in range(2)]
                               for _ in range(2)])
            assert (a * b).det() == a.det() * b.det()

    def test_pow_negative(self, k_sqrt2, sqrt2_gens):
        h = sqrt2_gens["h"]
        assert h ** -2 == (h ** 2).inverse()
        assert h ** 0 == MatN.identity(k_sqrt2, 2)

    def test_serialize_exact_strings(self, k_sqrt2):
        m = tg.upper_elementary(k_sqrt2, k_sqrt2.element(["1/2", "3"]))
        assert m.serialize()[0][1] == ["1/2", "3"]


class TestWords:
    def test_single_letter(self, k_sqrt2, sqrt2_gens):
        w = Word([("u+", 1)], sqrt2_gens)
        assert tg.word_eval(w) == tg.upper_elementary(k_sqrt2, 1)

    def test_torus_conjugation_squares_entry(self, k_sqrt2, theta_sqrt2,
                                             sqrt2_gens):
        # h u+ h^-1 = E12(theta^2)
        w = Word([("h", 1), ("u+", 1), ("h", -1)], sqrt2_gens)
        expected = tg.upper_elementary(k_sqrt2, theta_sqrt2.theta ** 2)
        assert tg.word_eval(w) == expected

    def test_cancellation(self, k_sqrt2, sqrt2_gens):
        w = Word([("u+", 1), ("u+", -1)], sqrt2_gens)
        assert tg.word_eval(w) == MatN.identity(k_sqrt2, 2)

    def test_unknown_generator(self, sqrt2_gens):
        with pytest.raises(ValueError, match="unknown generator"):
            Word([("g", 1)], sqrt2_gens)

    def test_concat_is_homomorphism(self, k_sqrt2, sqrt2_gens):
        rng = random.Random(31)
        names = list(sqrt2_gens)
        for _ in range(20):
            letters = [(rng.choice(names), rng.randint(-2, 2))
                       for _ in range(rng.randint(1, 6))]
            cut = rng.randint(0, len(letters))
            w1 = Word(letters[:cut], sqrt2_gens)
            w2 = Word(letters[cut:], sqrt2_gens)
            assert tg.word_eval(w1.concat(w2)) == \
                tg.word_eval(w1) * tg.word_eval(w2)

    def test_inverse_word(self, k_sqrt2, sqrt2_gens):
        w = Word([("h", 2), ("u+", 3), ("u-", -1)], sqrt2_gens)
        assert tg.word_eval(w.inverse()) == tg.word_eval(w).inverse()


class TestBruhat:
    def test_weyl_element(self, k_sqrt2):
        g = MatN(k_sqrt2, [[0, -1], [1, 0]])
        f = tg.bruhat_decompose(g)
        assert not f.is_borel
        assert f.u1.is_identity() and f.torus.is_identity()
        assert f.weyl == g and f.u2.is_identity()

    def test_borel_case(self, k_sqrt2, theta_sqrt2):
        t = theta_sqrt2.theta
        g = MatN(k_sqrt2, [[t, k_sqrt2.one()],
                           [k_sqrt2.zero(), t.inverse()]])
        f = tg.bruhat_decompose(g)
        assert f.is_borel
        assert f.weyl.is_identity() and f.u2.is_identity()
        assert f.u1 * f.torus == g

    def test_lower_unipotent_display(self, k_zeta8):
        # [[1,0],[r*alpha,1]] with alpha = i: the flipped-sign display is
        # [[1,1/(r a)],[0,1]] [[-1/(r a),0],[0,-r a]] [[0,1],[-1,0]] [[1,1/(r a)],[0,1]]
        alpha = k_zeta8.gen() ** 2
        for r in (1, 2, 3):
            ra = alpha * r
            g = tg.lower_elementary(k_zeta8, ra)
            f = tg.bruhat_decompose(g)
            u1, torus, weyl, u2 = f.flipped_sign_display()
            assert u1 == tg.upper_elementary(k_zeta8, ra.inverse())
            assert torus == MatN(k_zeta8, [[-ra.inverse(), 0], [0, -ra]])
            assert weyl == MatN(k_zeta8, [[0, 1], [-1, 0]])
            assert u2 == tg.upper_elementary(k_zeta8, ra.inverse())
            assert u1 * torus * weyl * u2 == g

    def test_roundtrip_random(self, k_sqrt2, sqrt2_gens):
        rng = random.Random(17)
        done = 0
        while done < 60:
            g = random_sl2_word(k_sqrt2, rng, sqrt2_gens)
            if not g.entries[1][0]:
                continue
            f = tg.bruhat_decompose(g)
            assert f.recompose() == g
            done += 1

    def test_det_not_one_rejected(self, k_sqrt2):
        with pytest.raises(ValueError, match="determinant"):
            tg.bruhat_decompose(MatN(k_sqrt2, [[2, 0], [0, 1]]))


class TestSU21:
    @pytest.fixture()
    def data_sqrt2(self, k_sqrt2):
        return tg.HermitianData.standard(k_sqrt2)

    @pytest.fixture()
    def zeta8_setting(self, k_zeta8):
        conj = tg.FieldAutomorphism.quadratic_conjugation(k_zeta8)
        data = tg.HermitianData(MatN(k_zeta8, [[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
                                conj)
        sqrt_z = k_zeta8.element([0, 1, 0, -1])   # sqrt2
        t_param = k_zeta8.gen() ** 2              # i, in O_F \ Z
        return data, sqrt_z, t_param

    def test_identity_in_group(self, k_sqrt2, data_sqrt2):
        assert tg.su21_check(MatN.identity(k_sqrt2, 3), data_sqrt2)

    def test_torus_family(self, k_sqrt2, data_sqrt2):
        theta = (k_sqrt2.one() + k_sqrt2.gen()) ** 2  # norm-one unit
        g = MatN(k_sqrt2, [[theta, 0, 0],
                           [0, (theta * theta).inverse(), 0],
                           [0, 0, theta]])
        assert tg.su21_check(g, data_sqrt2)

    def test_norm_minus_one_diagonal_fails(self, k_sqrt2, data_sqrt2):
        theta = k_sqrt2.one() + k_sqrt2.gen()  # norm -1
        g = MatN(k_sqrt2, [[theta, 0, 0],
                           [0, (theta * theta).inverse(), 0],
                           [0, 0, theta]])
        assert not tg.su21_check(g, data_sqrt2)

    def test_central_generator(self, zeta8_setting):
        data, sqrt_z, t = zeta8_setting
        g = tg.su21_uplus_generator(data, sqrt_z, t, 1)
        assert g.entries[0][2] == t * sqrt_z
        assert tg.su21_check(g, data)
        assert tg.su21_uplus_generator(data, sqrt_z, t, 0).is_identity()

    def test_full_generator(self, zeta8_setting, k_zeta8):
        data, sqrt_z, t = zeta8_setting
        u = k_zeta8.one() + sqrt_z
        g = tg.su21_uplus_generator(data, sqrt_z, t, 2, u)
        assert tg.su21_check(g, data)

    def test_commutator_lands_in_central_t_scaled(self, zeta8_setting, k_zeta8):
        data, sqrt_z, t = zeta8_setting
        u1 = k_zeta8.from_rational(2) + sqrt_z
        u2 = k_zeta8.one() + sqrt_z * 2
        a = tg.su21_uplus_generator(data, sqrt_z, t, 1, u1)
        b = tg.su21_uplus_generator(data, sqrt_z, k_zeta8.one(), 1, u2)
        c = tg.commutator(a, b)
        y = tg.u2alpha_parameter(c, sqrt_z, t)
        assert y is not None and isinstance(y, int)

    def test_malformed_parameters(self, zeta8_setting, k_zeta8):
        data, sqrt_z, _ = zeta8_setting
        with pytest.raises(ValueError, match="fixed by the conjugation"):
            tg.su21_uplus_generator(data, sqrt_z, sqrt_z, 1)  # conj(t) = -t
        with pytest.raises(ValueError, match="integral"):
            tg.su21_uplus_generator(data, sqrt_z, k_zeta8.one(), 1,
                                    k_zeta8.element(["1/3", 0, 0, 0]))

    def test_form_must_be_hermitian(self, k_sqrt2):
        conj = tg.FieldAutomorphism.quadratic_conjugation(k_sqrt2)
        bad = MatN(k_sqrt2, [[0, 0, k_sqrt2.gen()], [0, 1, 0], [1, 0, 0]])
        with pytest.raises(ValueError, match="hermitian"):
            tg.HermitianData(bad, conj)


class TestSl2ToSU21:
    def test_identity(self, k_sqrt2):
        s = k_sqrt2.gen()
        img = tg.sl2_to_su21(MatN.identity(k_sqrt2, 2), s)
        assert img == MatN.identity(k_sqrt2, 3)

    def test_upper_triangular_to_central(self, k_sqrt2):
        s = k_sqrt2.gen()
        img = tg.sl2_to_su21(tg.upper_elementary(k_sqrt2, 1), s)
        assert img.entries[0][2] == s
        assert img.entries[0][1] == k_sqrt2.zero()
        y = tg.u2alpha_parameter(img, s, k_sqrt2.one())
        assert y == 1

    def test_weyl_to_antidiagonal(self, k_sqrt2):
        s = k_sqrt2.gen()
        img = tg.sl2_to_su21(MatN(k_sqrt2, [[0, 1], [-1, 0]]), s)
        for i in range(3):
            for j in range(3):
                if i + j == 2:
                    assert img.entries[i][j]
                else:
                    assert not img.entries[i][j]

    def test_homomorphism_random(self, k_sqrt2):
        s = k_sqrt2.gen()
        data = tg.HermitianData.standard(k_sqrt2)
        rng = random.Random(41)
        for _ in range(40):
            a = tg.upper_elementary(k_sqrt2, rng.randint(-4, 4)) * \
                tg.lower_elementary(k_sqrt2, rng.randint(-4, 4))
            b = tg.lower_elementary(k_sqrt2, rng.randint(-4, 4)) * \
                tg.upper_elementary(k_sqrt2, rng.randint(-4, 4))
            assert tg.sl2_to_su21(a, s) * tg.sl2_to_su21(b, s) == \
                tg.sl2_to_su21(a * b, s)
            assert tg.sl2_to_su21(a.inverse(), s) == \
                tg.sl2_to_su21(a, s).inverse()
            assert tg.su21_check(tg.sl2_to_su21(a, s), data)
