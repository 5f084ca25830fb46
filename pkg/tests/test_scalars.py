"""Exact scalar arithmetic: field axioms, ordering, serialization."""

import decimal
from fractions import Fraction

import pytest

from outerbilliards.rng import Rng
from outerbilliards.scalars import (
    QuadExt,
    is_squarefree,
    quadext,
    scalar_from_json,
    scalar_to_json,
    sign,
)


def rand_fraction(rng, i, span=40):
    num = rng.int_range(2 * i, -span, span)
    den = rng.int_range(2 * i + 1, 1, span)
    return Fraction(num, den)


def rand_scalar(rng, i, d=5):
    kind = rng.int_range(3 * i, 0, 2)
    a = rand_fraction(rng.split(1), i)
    if kind == 0:
        return a
    b = rand_fraction(rng.split(2), i)
    return quadext(a, b if b != 0 else Fraction(1, 3), d)


def test_quadext_requires_squarefree():
    assert is_squarefree(5)
    assert is_squarefree(6)
    assert not is_squarefree(8)
    assert not is_squarefree(12)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 8)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 1)


def test_quadext_collapses_to_fraction():
    x = quadext(3, 0, 5)
    assert isinstance(x, Fraction) and x == 3
    y = QuadExt(1, 2, 5) - QuadExt(0, 2, 5)
    assert isinstance(y, Fraction) and y == 1


def test_quadext_sign_analysis():
    # 2 - sqrt(5) < 0 < 3 - sqrt(5)
    assert sign(quadext(2, -1, 5)) == -1
    assert sign(quadext(3, -1, 5)) == 1
    assert sign(quadext(-2, 1, 5)) == 1
    assert sign(quadext(-3, 1, 5)) == -1
    assert sign(quadext(0, 1, 5)) == 1
    assert sign(quadext(0, -1, 5)) == -1
    assert sign(Fraction(0)) == 0


def test_field_axioms_randomized():
    rng = Rng(2024).split(11)
    for i in range(300):
        a = rand_scalar(rng.split(0), i)
        b = rand_scalar(rng.split(1), i)
        c = rand_scalar(rng.split(2), i)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + 0 == a and a * 1 == a
        if sign(a) != 0:
            assert a * (1 / a if not isinstance(a, QuadExt) else Fraction(1) / a) == 1
            assert (b / a) * a == b


def test_mixed_rational_quadext_arithmetic():
    r = Fraction(3, 2)
    q = QuadExt(1, 1, 5)
    assert r + q == q + r == QuadExt(Fraction(5, 2), 1, 5)
    assert r * q == QuadExt(Fraction(3, 2), Fraction(3, 2), 5)
    assert (q - q) == 0
    assert q / q == 1
    assert 1 / q == QuadExt(Fraction(-1, 4), Fraction(1, 4), 5)
    # (1 + sqrt5)(−1 + sqrt5) = 4, so 1/(1+sqrt5) = (−1+sqrt5)/4
    assert q * (1 / q) == 1


def test_mixing_different_radicands_raises():
    with pytest.raises(ValueError):
        QuadExt(1, 1, 5) + QuadExt(1, 1, 7)


def test_ordering_transitive_and_matches_decimal_oracle():
    # float/decimal used strictly as a test oracle; the kernel never rounds
    decimal.getcontext().prec = 60
    rng = Rng(7).split(99)
    vals = []
    for i in range(10_000):
        a = rand_fraction(rng.split(0), i, span=25)
        b = rand_fraction(rng.split(1), i, span=25)
        if b == 0:
            b = Fraction(1, 7)
        vals.append(QuadExt(a, b, 5))
    sqrt5 = decimal.Decimal(5).sqrt()

    def approx(q):
        return (decimal.Decimal(q.a.numerator) / q.a.denominator
                + (decimal.Decimal(q.b.numerator) / q.b.denominator) * sqrt5)

    for i in range(0, len(vals) - 1, 2):
        x, y = vals[i], vals[i + 1]
        ax, ay = approx(x), approx(y)
        if abs(ax - ay) > decimal.Decimal("1e-30"):
            assert (x < y) == (ax < ay)
    # transitivity spot-check on sorted triples
    s = sorted(vals[:300])
    for i in range(len(s) - 2):
        assert s[i] <= s[i + 1] <= s[i + 2]
        assert s[i] <= s[i + 2]


def test_serialization_round_trip():
    cases = [Fraction(5), Fraction(-7, 3), quadext(Fraction(1, 2), Fraction(-2, 3), 5)]
    for x in cases:
        enc = scalar_to_json(x)
        d = x.d if isinstance(x, QuadExt) else None
        assert scalar_from_json(enc, quad_d=d) == x
    assert scalar_to_json(Fraction(5)) == "5"
    assert scalar_to_json(Fraction(-7, 3)) == "-7/3"
    assert scalar_from_json("12") == Fraction(12)
    assert scalar_from_json(3) == Fraction(3)


def test_serialization_rejects_field_mismatch():
    enc = {"a": "1", "b": "1/2", "d": 5}
    with pytest.raises(ValueError):
        scalar_from_json(enc)  # rational document cannot hold radicals
    with pytest.raises(ValueError):
        scalar_from_json(enc, quad_d=7)
    with pytest.raises(ValueError):
        scalar_from_json({"a": "1"}, quad_d=5)
    with pytest.raises(ValueError):
        scalar_from_json(True)
