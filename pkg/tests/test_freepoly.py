from fractions import Fraction

import pytest

from src.algebra.field import Field
from src.algebra.freepoly import (MINUS_INFINITY, FreePoly, all_words, commutator, deglex_key,
                                  homogeneous_part, substitute, word_text)
from src.cli.acceptance import random_poly
from src.utils.errors import DomainViolationError, StructureMismatchError


def test_multiplication_is_noncommutative(xy):
    x, y = xy
    assert x * y != y * x
    assert (x * y).words() == [(0, 1)]


def test_commutator_canonical_text(xy):
    x, y = xy
    assert commutator(x, y).to_text() == '-z1 z0 + z0 z1'
    assert not commutator(x, x * x)


def test_square_of_sum_has_four_words(xy):
    x, y = xy
    square = (x + y) ** 2
    assert sorted(square.words()) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert all(c == square.field.one for _, c in square.terms())


def test_terms_are_deglex_descending(xy):
    x, y = xy
    f = x + y * y + 1 + x * y
    keys = [deglex_key(w) for w in f.words()]
    assert keys == sorted(keys, reverse=True)
    assert f.leading_word == (1, 1)
    assert f.degree == 2
    assert f.constant_term == f.field.one


def test_zero_polynomial(fp):
    zero = FreePoly.zero(fp, 2)
    assert zero.degree is MINUS_INFINITY
    assert MINUS_INFINITY < 0
    assert zero.to_text() == '0'
    with pytest.raises(DomainViolationError):
        zero.leading_word


def test_text_forms(fp, qq, xy):
    x, _ = xy
    assert FreePoly.constant(fp, 2, 3).to_text() == '3'
    assert (x.scale(2) - 3).to_text() == '2*z0 - 3'
    assert (-x).to_text() == '-z0'
    half = FreePoly.generator(qq, 2, 0).scale(Fraction(1, 2))
    assert half.to_text() == '1/2*z0'
    assert word_text(()) == '1'


def test_change_field_uses_rational_value(qq):
    half = FreePoly.generator(qq, 1, 0).scale(Fraction(1, 2))
    f7 = Field.prime(7)
    assert half.change_field(f7).coefficient((0,)) == f7(4)


def test_substitute(xy):
    x, y = xy
    assert substitute(x * y, [y, x]) == y * x
    assert substitute((x + y) ** 2, [x, x]) == (x * x).scale(4)
    with pytest.raises(StructureMismatchError):
        substitute(x, [y])


def test_structure_errors(fp, qq):
    with pytest.raises(StructureMismatchError):
        FreePoly.generator(fp, 2, 0) + FreePoly.generator(qq, 2, 0)
    with pytest.raises(StructureMismatchError):
        FreePoly.generator(fp, 2, 0) * FreePoly.generator(fp, 3, 0)
    with pytest.raises(StructureMismatchError):
        FreePoly(fp, 2, {(2,): fp.one})


def test_domain_errors(xy):
    x, _ = xy
    with pytest.raises(DomainViolationError):
        x ** -1
    with pytest.raises(DomainViolationError):
        homogeneous_part(x, -1)


def test_homogeneous_components(xy):
    x, y = xy
    f = x * y + y + 5
    parts = f.homogeneous_components()
    assert set(parts) == {0, 1, 2}
    assert homogeneous_part(f, 2) == x * y
    assert not f.is_homogeneous()
    assert (x * y - y * x).is_homogeneous()


def test_monic(xy):
    x, y = xy
    f = (x * y).scale(3) + y
    assert f.monic().leading_coefficient == f.field.one


def test_all_words_count():
    assert len(list(all_words(3, 4))) == 81
    assert list(all_words(2, 0)) == [()]


def test_ring_axioms_on_random_triples(fp, rng):
    for _ in range(50):
        a, b, c = (random_poly(fp, 2, rng, 3, 4) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a - a == 0


def test_no_zero_divisors_and_leading_words_multiply(fp, rng):
    for _ in range(200):
        a, b = random_poly(fp, 3, rng, 3, 4), random_poly(fp, 3, rng, 3, 4)
        product = a * b
        assert product
        assert product.leading_word == a.leading_word + b.leading_word
        assert product.leading_coefficient == a.leading_coefficient * b.leading_coefficient
        assert product.degree == a.degree + b.degree


def test_substitution_is_a_ring_endomorphism(fp, rng):
    for _ in range(50):
        images = [random_poly(fp, 2, rng, 2, 3) for _ in range(2)]
        a, b = random_poly(fp, 2, rng, 3, 3), random_poly(fp, 2, rng, 3, 3)
        assert substitute(a * b, images) == substitute(a, images) * substitute(b, images)
        assert substitute(a + b.scale(3), images) == substitute(a, images) + substitute(b, images).scale(3)


def test_homogeneous_parts_sum_back(fp, rng):
    for _ in range(100):
        f = random_poly(fp, 2, rng, 5, 6)
        total = f - f
        for d in range(f.degree + 1):
            part = homogeneous_part(f, d)
            assert all(len(w) == d for w, _ in part.terms())
            total = total + part
        assert total == f
