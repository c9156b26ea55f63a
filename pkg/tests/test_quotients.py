"""Laurent polynomials, affine maps, and the lamplighter quotient."""

import random
from fractions import Fraction

import pytest

from bslimits import (
    AffineMap,
    LaurentPoly,
    NonUnit,
    affine_image,
    gamma_image,
    in_kernel_N,
    lamplighter_image,
    parse,
)
from bslimits.bs import BsParams
from bslimits.words import Word


def rand_word(rng, h_max=4, e_max=3):
    h = rng.randrange(0, h_max)
    return Word(
        rng.randint(-e_max, e_max),
        tuple((rng.choice([1, -1]), rng.randint(-e_max, e_max)) for _ in range(h)),
    )


def test_laurent_arithmetic():
    t = LaurentPoly.monomial(1)
    one = LaurentPoly.one()
    p = t + one
    assert p * p == t * t + t + t + one
    assert p - p == LaurentPoly.zero()
    assert -p + p == LaurentPoly.zero()
    assert LaurentPoly.monomial(-2, 3) * t == LaurentPoly.monomial(-1, 3)


def test_laurent_strings():
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly.one()) == "1"
    assert str(LaurentPoly.monomial(2, 3)) == "3*t^2"
    assert str(LaurentPoly.monomial(0, -1) + LaurentPoly.monomial(1)) == "-1 + t"


def test_laurent_inverse_units_only():
    u = LaurentPoly.monomial(4, -1)
    assert u.inverse() * u == LaurentPoly.one()
    assert LaurentPoly.monomial(-3).inverse() == LaurentPoly.monomial(3)
    with pytest.raises(NonUnit):
        (LaurentPoly.one() + LaurentPoly.monomial(1)).inverse()
    with pytest.raises(NonUnit):
        LaurentPoly.monomial(0, 2).inverse()
    with pytest.raises(NonUnit):
        LaurentPoly.zero().inverse()


def test_affine_map_compose():
    f = AffineMap(Fraction(3, 2), Fraction(1))
    g = AffineMap(Fraction(2), Fraction(-5))
    assert f.compose(g)(7) == f(g(7))
    assert g.compose(f)(7) == g(f(7))
    assert f(0) == 1 and f(2) == 4


def test_affine_image_is_a_homomorphism():
    rng = random.Random(17)
    alpha = Fraction(3, 2)
    for _ in range(100):
        u, v = rand_word(rng), rand_word(rng)
        fu, fv, fuv = affine_image(u, alpha), affine_image(v, alpha), affine_image(u * v, alpha)
        assert fu.compose(fv) == fuv


def test_affine_image_matches_gamma():
    rng = random.Random(18)
    for _ in range(100):
        m, n = rng.choice([(2, 3), (-2, 5), (3, 2)])
        w = rand_word(rng)
        assert gamma_image(w, BsParams(m, n)) == affine_image(w, Fraction(n, m))


def test_lamplighter_generator_images():
    a = lamplighter_image(parse("a"))
    assert (a.sigma, a.poly) == (1, LaurentPoly.zero())
    b = lamplighter_image(parse("b"))
    assert (b.sigma, b.poly) == (0, LaurentPoly.one())
    # conjugation by a moves the lamp one slot up
    c = lamplighter_image(parse("a b A"))
    assert (c.sigma, c.poly) == (0, LaurentPoly.monomial(1))
    d = lamplighter_image(parse("A b^3 a"))
    assert (d.sigma, d.poly) == (0, LaurentPoly.monomial(-1, 3))


def test_lamplighter_commutator_of_lamps_dies():
    w = parse("b a b A B a B A")
    assert lamplighter_image(w).is_identity
    assert in_kernel_N(w)
    assert not in_kernel_N(parse("b"))
    assert not in_kernel_N(parse("a"))


def test_lamplighter_is_a_homomorphism():
    rng = random.Random(19)
    for _ in range(150):
        u, v = rand_word(rng), rand_word(rng)
        assert lamplighter_image(u * v) == lamplighter_image(u) * lamplighter_image(v)
        assert lamplighter_image(u * ~u).is_identity


def test_lamplighter_config_positions():
    # a^k b a^-k lights slot k, so a balanced product cancels slotwise
    w = parse("a^2 b A^2 b B a^2 B A^2")
    assert lamplighter_image(w).is_identity
    v = parse("a^2 b A^2 B a b A")
    el = lamplighter_image(v)
    assert el.sigma == 0
    assert el.poly == (
        LaurentPoly.monomial(2)
        + LaurentPoly.monomial(0, -1)
        + LaurentPoly.monomial(1)
    )
