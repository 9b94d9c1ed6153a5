import random
from fractions import Fraction

import pytest

from cherednik_kit.scalars import (
    AffineForm,
    FactoredScalar,
    ParameterPoint,
    PoleError,
    convert_parameters,
    parse_rational,
    pochhammer,
    proportional,
    random_point,
)


def form(r, const=0, c0=0, d=None):
    return AffineForm(r, const=const, c0=c0, d=d or {})


class TestAffineForm:
    def test_d_index_reduction(self):
        assert AffineForm(3, d={1: 2}) == AffineForm(3, d={4: 2})
        assert AffineForm(3, d={1: 2}) == AffineForm(3, d={-2: 2})

    def test_duplicate_indices_accumulate(self):
        f = AffineForm(2, d={0: 1}) + AffineForm(2, d={2: -1})
        assert f.is_zero()

    def test_evaluate(self):
        p = ParameterPoint(2, Fraction(1, 2), [Fraction(1), Fraction(-1)])
        f = form(2, const=1, c0=-2, d={0: 1, 1: -1})
        assert f.evaluate(p) == 1 - 1 + 1 + 1

    def test_primitive(self):
        f = form(1, const=Fraction(2, 3), c0=Fraction(4, 3))
        prim, scale = f.primitive()
        assert prim == form(1, const=1, c0=2)
        assert scale == Fraction(2, 3)
        g = form(1, const=-1, c0=-2)
        prim2, scale2 = g.primitive()
        assert prim2 == prim and scale2 == -1

    def test_render(self):
        assert str(form(2, const=1, c0=2)) == "1 + 2*c0"
        assert str(form(2, const=1, d={0: 1, 1: -1})) == "1 + d0 - d1"
        assert str(form(2, c0=Fraction(-3, 2))) == "-3/2*c0"
        assert str(form(2)) == "0"


class TestFactoredScalar:
    def test_rejects_zero_factor(self):
        with pytest.raises(ValueError):
            FactoredScalar(1, 1, (form(1),))

    def test_normalize_cancellation(self):
        a = form(1, const=1, c0=1)
        b = form(1, const=1, c0=2)
        s = FactoredScalar(1, 1, (a, b), (a,))
        n = s.normalize()
        assert n.den == () and n.num == (b,) and n.coefficient == 1

    def test_normalize_proportional_factors(self):
        s = FactoredScalar(1, 2, (form(1, const=2, c0=2),), (form(1, const=1, c0=1),))
        n = s.normalize()
        assert n.num == () and n.den == () and n.coefficient == 4

    def test_normalize_idempotent_random(self, rng):
        for _ in range(100):
            r = rng.randint(1, 3)
            num = []
            den = []
            for _ in range(rng.randint(0, 4)):
                f = AffineForm(r, rng.randint(-3, 3), rng.randint(-3, 3),
                               {rng.randrange(r): rng.randint(-2, 2)})
                if f.is_zero():
                    continue
                (num if rng.random() < 0.5 else den).append(f)
            s = FactoredScalar(r, Fraction(rng.randint(1, 9), rng.randint(1, 9)), num, den)
            once = s.normalize()
            assert once.normalize() == once

    def test_normalize_preserves_evaluate(self, rng):
        for _ in range(50):
            r = rng.randint(1, 3)
            factors = [AffineForm(r, rng.randint(1, 4), rng.randint(-3, 3),
                                  {rng.randrange(r): rng.randint(-2, 2)})
                       for _ in range(3)]
            s = FactoredScalar(r, Fraction(3, 7), factors[:2], factors[2:])
            p = random_point(r, rng, bound=50)
            try:
                expected = s.evaluate(p)
            except PoleError:
                continue
            assert s.normalize().evaluate(p) == expected

    def test_evaluate_distributes(self, rng):
        r = 2
        a = FactoredScalar(r, 2, (form(r, 1, 1),))
        b = FactoredScalar(r, 3, (form(r, 1, 0, {0: 1}),), (form(r, 5),))
        p = random_point(r, rng, bound=20)
        assert (a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p)

    def test_pole_error_names_factor(self):
        s = FactoredScalar(1, 1, (), (form(1, c0=1),))
        p = ParameterPoint(1, 0, [0])
        with pytest.raises(PoleError) as err:
            s.evaluate(p)
        assert "c0" in str(err.value)

    def test_numerator_zero_is_zero(self):
        s = FactoredScalar(1, 1, (form(1, const=1, c0=2),))
        assert s.evaluate(ParameterPoint(1, Fraction(-1, 2), [0])) == 0


class TestPochhammer:
    def test_empty(self):
        one = pochhammer(form(1, c0=1), 0)
        assert one.num == () and one.coefficient == 1

    def test_c0_squared(self):
        s = pochhammer(form(1, c0=1), 2)
        assert s.num == (form(1, c0=1), form(1, const=1, c0=1))

    def test_constant_is_factorial(self, rng):
        s = pochhammer(form(1, const=1), 5)
        assert s.evaluate(random_point(1, rng)) == 120

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            pochhammer(form(1, c0=1), -1)


class TestProportional:
    def test_constant_multiple(self):
        f = form(1, const=1, c0=1)
        a = FactoredScalar(1, 2, (f,))
        b = FactoredScalar(1, 1, (f,))
        assert proportional(a, b) == 2

    def test_not_proportional(self):
        a = FactoredScalar.from_affine(form(1, const=1, c0=1))
        b = FactoredScalar.from_affine(form(1, const=1, c0=2))
        assert proportional(a, b) is None

    def test_scaled_factors(self):
        a = FactoredScalar(1, 1, (form(1, const=2, c0=2),))
        b = FactoredScalar(1, 1, (form(1, const=1, c0=1),))
        assert proportional(a, b) == 2


class TestConvert:
    def test_hecke_exponents(self):
        p = ParameterPoint(1, Fraction(1, 2), [0])
        out = convert_parameters(p, "hecke")
        assert out["q_exponent"] == Fraction(-1, 2)
        assert out["Q_exponents"] == (Fraction(0),)

    def test_gordon(self):
        p = ParameterPoint(2, Fraction(1, 3), [1, -1])
        out = convert_parameters(p, "gordon")
        assert out["h"] == Fraction(-1, 3)
        # H_j = (d_{j-1} - d_j)/r
        assert out["H"] == (Fraction(-1), Fraction(1))

    def test_rouquier_zero(self):
        p = ParameterPoint(3, 1, [0, 0, 0])
        out = convert_parameters(p, "rouquier")
        assert out["h_j"] == (0, 0, 0)

    def test_unknown(self):
        with pytest.raises(ValueError):
            convert_parameters(ParameterPoint(1, 0, [0]), "nope")


def test_parse_rational():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational("5") == 5


def test_sum_zero_flag():
    ParameterPoint(2, 1, [1, -1], require_sum_zero=True)
    with pytest.raises(ValueError):
        ParameterPoint(2, 1, [1, 1], require_sum_zero=True)
