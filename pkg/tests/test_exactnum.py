import math
import random
from fractions import Fraction

import pytest
from conftest import random_surds

from qmark import (
    DomainError,
    ParseError,
    QuadraticSurd,
    compare,
    decimal_str,
    format_value,
    isqrt,
    mobius_apply,
    parse_value,
    rat_arith,
    surd_floor,
    surd_normalize,
)

GOLDEN = surd_normalize(-1, 5, 2)  # (sqrt(5)-1)/2
ROOT2M1 = surd_normalize(-1, 2, 1)  # sqrt(2)-1


class TestRatArith:
    def test_examples(self):
        assert rat_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
        assert rat_arith(Fraction(2, 3), Fraction(2, 3), "sub") == Fraction(0)
        assert rat_arith(Fraction(1, 2), Fraction(1, 4), "div") == Fraction(2)

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            rat_arith(Fraction(1), Fraction(0), "div")

    def test_unknown_op(self):
        with pytest.raises(DomainError):
            rat_arith(Fraction(1), Fraction(1), "pow")

    def test_against_integer_oracle(self):
        # cross-multiplied integer arithmetic, reduced by hand
        def oracle(a, b, op):
            an, ad, bn, bd = a.numerator, a.denominator, b.numerator, b.denominator
            if op == "add":
                n, d = an * bd + bn * ad, ad * bd
            elif op == "sub":
                n, d = an * bd - bn * ad, ad * bd
            elif op == "mul":
                n, d = an * bn, ad * bd
            else:
                n, d = an * bd, ad * bn
            if d < 0:
                n, d = -n, -d
            g = math.gcd(abs(n), d)
            return (n // g, d // g)

        rng = random.Random(11)
        for _ in range(500):
            a = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
            b = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
            for op in ("add", "sub", "mul", "div"):
                if op == "div" and b == 0:
                    continue
                got = rat_arith(a, b, op)
                assert (got.numerator, got.denominator) == oracle(a, b, op)
                assert got.denominator > 0


class TestIsqrt:
    def test_examples(self):
        assert isqrt(0) == 0
        assert isqrt(5) == 2
        r = isqrt(10**40)
        assert r == 10**20
        assert r * r <= 10**40 < (r + 1) * (r + 1)

    def test_negative(self):
        with pytest.raises(DomainError):
            isqrt(-1)

    def test_bracketing_property(self):
        rng = random.Random(12)
        for _ in range(300):
            n = rng.randint(0, 10**50)
            r = isqrt(n)
            assert r * r <= n < (r + 1) * (r + 1)


class TestSurdFloor:
    def test_examples(self):
        phi = QuadraticSurd(1, 5, 2)  # (1+sqrt(5))/2
        assert surd_floor(phi) == 1
        assert surd_floor(QuadraticSurd(-1, 5, 2)) == 0
        assert surd_floor(QuadraticSurd(0, 2, 1)) == 1

    def test_negative_denominator(self):
        assert surd_floor(QuadraticSurd(1, 5, -2)) == -2  # -1.618...

    def test_bracketing_property(self):
        rng = random.Random(13)
        for _ in range(300):
            p = rng.randint(-50, 50)
            d = rng.randint(2, 2500)
            q = rng.randint(1, 50) * rng.choice((1, -1))
            x = surd_normalize(p, d, q)
            if not isinstance(x, QuadraticSurd):
                continue
            n = surd_floor(x)
            assert compare(Fraction(n), x) < 0 < compare(Fraction(n + 1), x)


class TestCompare:
    def test_examples(self):
        assert compare(GOLDEN, Fraction(2, 3)) < 0
        half_root2 = surd_normalize(0, 2, 2)
        assert compare(half_root2, surd_normalize(0, 2, 2)) == 0
        assert compare(GOLDEN, Fraction(1, 2)) > 0

    def test_antisymmetry_and_float_agreement(self):
        rng = random.Random(14)
        values = random_surds(rng, 40) + [
            Fraction(rng.randint(0, 100), rng.randint(1, 100)) for _ in range(40)
        ]
        for i, x in enumerate(values):
            for y in values[i:]:
                c = compare(x, y)
                assert c == -compare(y, x)
                fx, fy = float(x), float(y)
                if abs(fx - fy) > 1e-9:
                    assert c == (1 if fx > fy else -1)

    def test_equal_values_across_representations(self):
        x = QuadraticSurd(-1, 5, 2)
        scaled = QuadraticSurd(-3, 45, 6)  # same value, unreduced triple
        assert compare(x, scaled) == 0
        assert x == scaled
        assert hash(x) == hash(scaled)

    def test_surd_never_equals_rational(self):
        assert compare(ROOT2M1, Fraction(2, 5)) != 0
        assert ROOT2M1 != Fraction(2, 5)


class TestSurdNormalize:
    def test_perfect_square_collapses(self):
        assert surd_normalize(1, 9, 2) == Fraction(2)

    def test_already_normal(self):
        assert surd_normalize(1, 5, 2) == QuadraticSurd(1, 5, 2)

    def test_rescale_example(self):
        v = surd_normalize(1, 2, 2)
        assert isinstance(v, QuadraticSurd)
        assert (v.p, v.d, v.q) == (2, 8, 4)

    def test_value_preserved_to_50_digits(self):
        k = 10**60
        for (p, d, q) in [(1, 2, 2), (3, 7, 5), (-4, 19, 6), (2, 45, -7)]:
            raw = Fraction(p * k + math.isqrt(d * k * k), q * k)
            v = surd_normalize(p, d, q)
            norm = Fraction(v.p * k + math.isqrt(v.d * k * k), v.q * k)
            assert abs(raw - norm) < Fraction(1, 10**50)

    def test_errors(self):
        with pytest.raises(DomainError):
            surd_normalize(1, 5, 0)
        with pytest.raises(DomainError):
            surd_normalize(1, -5, 1)

    def test_invalid_direct_construction(self):
        with pytest.raises(DomainError):
            QuadraticSurd(1, 9, 2)  # perfect square radicand
        with pytest.raises(DomainError):
            QuadraticSurd(1, 2, 2)  # q does not divide d - p*p


class TestParseFormat:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("2/3", Fraction(2, 3)),
            ("-1/2", Fraction(-1, 2)),
            ("0", Fraction(0)),
            ("(-1+sqrt(5))/2", QuadraticSurd(-1, 5, 2)),
            ("(−1+sqrt(5))/2", QuadraticSurd(-1, 5, 2)),  # unicode minus
            ("(sqrt(5)-1)/2", QuadraticSurd(-1, 5, 2)),
            ("sqrt(2)", QuadraticSurd(0, 2, 1)),
            ("sqrt(2)/2", QuadraticSurd(0, 2, 2)),
            ("(3-sqrt(5))/2", QuadraticSurd(-3, 5, -2)),
            ("(1+sqrt(4))/2", Fraction(3, 2)),  # square radicand is rational
        ],
    )
    def test_parse(self, text, expected):
        assert parse_value(text) == expected

    @pytest.mark.parametrize("text", ["", "sqrt()", "1/0", "(1+sqrt(2))/0", "abc", "0.5"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            parse_value(text)

    def test_format_examples(self):
        assert format_value(Fraction(2, 3)) == "2/3"
        assert format_value(Fraction(2)) == "2"
        assert format_value(QuadraticSurd(-1, 2, 1)) == "(-1+sqrt(2))/1"
        assert format_value(QuadraticSurd(-3, 5, -2)) == "(3-sqrt(5))/2"

    def test_round_trip(self):
        rng = random.Random(15)
        for v in random_surds(rng, 50):
            assert parse_value(format_value(v)) == v


class TestMobius:
    def test_identity(self):
        assert mobius_apply(1, 0, 0, 1, GOLDEN) == GOLDEN

    def test_reciprocal_of_golden(self):
        # 1/g = g + 1 = (1+sqrt(5))/2
        assert mobius_apply(0, 1, 1, 0, GOLDEN) == QuadraticSurd(1, 5, 2)

    def test_degenerate_map_is_constant(self):
        assert mobius_apply(2, 4, 1, 2, GOLDEN) == Fraction(2)

    def test_value_against_float(self):
        rng = random.Random(16)
        for v in random_surds(rng, 30):
            a, b, c, e = (rng.randint(-5, 5) for _ in range(4))
            if a * e - b * c == 0 or c * float(v) + e == 0:
                continue
            denom = c * float(v) + e
            if abs(denom) < 1e-6:
                continue
            got = mobius_apply(a, b, c, e, v)
            expect = (a * float(v) + b) / denom
            assert abs(float(got) - expect) < 1e-7


class TestDecimal:
    def test_fraction_rendering(self):
        assert decimal_str(Fraction(2, 3), 5) == "0.66667"
        assert decimal_str(Fraction(1, 4), 3) == "0.250"
        assert decimal_str(Fraction(-1, 8), 2) == "-0.12"  # ties to even

    def test_surd_rendering(self):
        assert decimal_str(GOLDEN, 10) == "0.6180339887"
        assert decimal_str(ROOT2M1, 12) == "0.414213562373"
