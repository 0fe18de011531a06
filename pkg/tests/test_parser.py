from fractions import Fraction

import pytest

from src.algebra.field import Field
from src.algebra.freepoly import FreePoly
from src.cli.parser import (Generator, Power, Product, ScalarLit, StandardPoly, Sum, infer_alphabet,
                            parse_expr, parse_poly, parse_word, tokenize, word_alphabet)
from src.cli.acceptance import random_poly
from src.genmat.identities import standard_polynomial
from src.utils.errors import DomainViolationError, ParseError


def test_syntax_tree():
    assert parse_expr('x') == Generator(0)
    assert parse_expr('2*z3') == Product((ScalarLit(Fraction(2)), Generator(3)))
    assert parse_expr('x^3') == Power(Generator(0), 3)
    assert parse_expr('x - 1/2') == Sum(((1, Generator(0)), (-1, ScalarLit(Fraction(1, 2)))))
    assert parse_expr('-y') == Sum(((-1, Generator(1)),))
    assert parse_expr('S4') == StandardPoly(4)


def test_juxtaposition_matches_explicit_product():
    assert parse_expr('z0 z1 z0') == parse_expr('z0*z1*z0')
    assert parse_expr('xy') == parse_expr('x*y')
    assert parse_expr('2(x+y)') == parse_expr('2*(x+y)')


def test_negative_exponent_is_rejected():
    with pytest.raises(ParseError) as info:
        parse_expr('x^(-1)')
    assert 'natural number' in info.value.expected
    with pytest.raises(ParseError):
        parse_expr('x^1/2')


def test_lowering(fp, xy):
    x, y = xy
    assert parse_poly('(x+y)^2', fp) == x * x + x * y + y * x + y * y
    assert parse_poly('x y - y x', fp) == x * y - y * x
    f2 = Field.prime(2)
    assert parse_poly('2*(x+y)', f2, s=2) == FreePoly.zero(f2, 2)
    assert parse_poly('1/2 x', Field.rational()).coefficient((0,)) == Field.rational()(Fraction(1, 2))


def test_canonical_text_reads_back(rng):
    for field in (Field.prime(101), Field.rational()):
        for _ in range(50):
            f = random_poly(field, 3, rng, 4, 5)
            assert parse_poly(f.to_text(), field, s=3) == f


def test_unknown_generators():
    with pytest.raises(ParseError):
        parse_expr('w')
    with pytest.raises(ParseError):
        parse_expr('z5', s=2)
    with pytest.raises(ParseError):
        parse_expr('S3', s=2)


def test_exponent_limit():
    with pytest.raises(ParseError):
        parse_expr('x^5000')


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_expr('x +\n  * y')
    assert (info.value.line, info.value.column) == (2, 3)
    assert info.value.to_dict()['error'] == 'syntax'
    with pytest.raises(ParseError) as info:
        parse_expr('(x + y')
    assert "')'" in info.value.expected
    with pytest.raises(ParseError):
        tokenize('x # y')


def test_alphabet_inference(fp):
    assert infer_alphabet(parse_expr('S4')) == 4
    assert infer_alphabet(parse_expr('x + z2^2')) == 3
    assert infer_alphabet(parse_expr('7')) == 1
    assert parse_poly('S4', fp) == standard_polynomial(4, fp)


def test_literal_not_representable():
    with pytest.raises(DomainViolationError):
        parse_poly('1/7 x', Field.prime(7))


def test_words():
    assert parse_word('aab') == (0, 0, 1)
    assert parse_word('z0 z0 z1') == (0, 0, 1)
    assert parse_word('1') == ()
    assert word_alphabet((0, 3), (1,)) == 4
    with pytest.raises(ParseError):
        parse_word('a+b')
