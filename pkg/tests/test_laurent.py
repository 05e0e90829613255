import random

import pytest

from qalink.laurent import LaurentPoly, ONE, X, ZERO


def L(s):
    return LaurentPoly.parse(s)


def test_add_cancels():
    assert X + (-X) == ZERO
    assert (X - X).is_zero()


def test_shift():
    p = L("2x+1-2x^-1")
    assert p.shift(1) == L("2x^2+x-2")
    assert p.shift(1).shift(-1) == p


def test_mul():
    assert (X - 1) * (X + 1) == L("x^2-1")
    assert L("2x^3+4x^2-2x-3") * ONE == L("2x^3+4x^2-2x-3")


def test_scale():
    assert L("x^2-1").scale(-2) == L("-2x^2+2")
    assert L("x^2-1").scale(0) == ZERO


def test_eval_golden_values():
    # figure-eight polynomial at 2 equals det^2 = 25
    assert L("2x^3+4x^2-2x-3")(2) == 25
    # Hopf link polynomial at 2 equals det^2 = 4
    assert L("2x+1-2x^-1")(2) == 4
    assert ONE(7) == 1
    assert ONE(-3) == 1


def test_eval_zero_with_negative_exponent():
    with pytest.raises(ZeroDivisionError):
        L("2x^-1")(0)
    assert L("x^2+1")(0) == 1


def test_degrees():
    p = L("2x^3+4x^2-2x-3")
    assert p.degree() == 3
    assert p.min_degree() == 0
    h = L("2x+1-2x^-1")
    assert h.degree() == 1
    assert h.min_degree() == -1


def test_zero_degree_raises():
    with pytest.raises(ValueError):
        ZERO.degree()
    with pytest.raises(ValueError):
        ZERO.min_degree()


def test_pow():
    h = L("2x^-1-1")
    assert h**0 == ONE
    assert h**3 == h * h * h


def _random_poly(rng, span=4, cmax=5):
    return LaurentPoly(
        {e: rng.randint(-cmax, cmax) for e in range(-span, span + 1) if rng.random() < 0.5}
    )


def test_ring_axioms_random():
    rng = random.Random(1)
    for _ in range(200):
        p, q, r = (_random_poly(rng) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_degree_of_product():
    rng = random.Random(2)
    done = 0
    while done < 100:
        p, q = _random_poly(rng), _random_poly(rng)
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).degree() == p.degree() + q.degree()
        assert (p * q).min_degree() == p.min_degree() + q.min_degree()
        done += 1


def test_eval_is_ring_homomorphism():
    rng = random.Random(3)
    from fractions import Fraction

    for _ in range(100):
        p, q = _random_poly(rng), _random_poly(rng)
        v = Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1))
        assert (p * q)(v) == p(v) * q(v)
        assert (p + q)(v) == p(v) + q(v)


def test_str_parse_round_trip():
    rng = random.Random(4)
    for _ in range(200):
        p = _random_poly(rng)
        assert LaurentPoly.parse(str(p)) == p


def test_parse_golden_forms():
    assert str(L("2x^3+4x^2-2x-3")) == "2x^3+4x^2-2x-3"
    assert str(L("2x+1-2x^-1")) == "2x+1-2x^-1"
    assert str(ZERO) == "0"
    assert L("0") == ZERO
    assert L("-x") == -X
    assert L("x^-2") == LaurentPoly.monomial(1, -2)


def test_parse_rejects_garbage():
    for bad in ["", "x+", "2^3", "y+1", "x^"]:
        with pytest.raises(ValueError):
            L(bad)


def test_equals_after_roundtrips():
    rng = random.Random(5)
    for _ in range(50):
        p, q = _random_poly(rng), _random_poly(rng)
        assert (p + q) - q == p
