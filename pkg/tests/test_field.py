from fractions import Fraction

import pytest

from src.algebra.field import Field, default_field
from src.utils.errors import DomainViolationError
from src.utils.settings import Defaults


def test_parse_descriptors():
    assert not Field.parse('q').is_prime_field
    assert Field.parse('p:7').modulus == 7
    assert Field.parse('p:7') == Field.prime(7)
    assert Field.parse('q').descriptor == 'q'
    assert default_field().modulus == Defaults.DEFAULT_PRIME


@pytest.mark.parametrize('text', ['p:8', 'p:1', 'p:x', 'r', ''])
def test_parse_rejects_bad_descriptors(text):
    with pytest.raises(DomainViolationError):
        Field.parse(text)


def test_prime_field_arithmetic():
    f7 = Field.prime(7)
    assert f7(3) * f7(5) == f7(1)
    assert f7.signed_residue(f7(6)) == -1
    assert f7.residue(f7(-1)) == 6
    assert f7.characteristic == 7


def test_denominator_divisible_by_p_is_rejected():
    with pytest.raises(DomainViolationError):
        Field.prime(7).from_fraction(1, 7)
    with pytest.raises(DomainViolationError):
        Field.rational().from_fraction(1, 0)


def test_text_and_json(qq):
    half = qq(Fraction(1, 2))
    assert qq.to_text(half) == '1/2'
    assert qq.to_json(half) == '1/2'
    assert qq.to_json(qq(3)) == 3
    assert Field.prime(7).to_json(Field.prime(7)(6)) == -1


def test_convert_from_rational_to_prime(qq):
    f7 = Field.prime(7)
    assert f7.convert_from(qq(Fraction(1, 2)), qq) == f7(4)


def test_kth_root_prime_field_takes_least_residue():
    f7 = Field.prime(7)
    assert f7.kth_root(f7(2), 2) == f7(3)
    assert f7.kth_root(f7(3), 2) is None
    assert f7.kth_root(f7(0), 3) == f7(0)


def test_kth_root_rationals(qq):
    assert qq.kth_root(qq(-8), 3) == qq(-2)
    assert qq.kth_root(qq(Fraction(4, 9)), 2) == qq(Fraction(2, 3))
    assert qq.kth_root(qq(2), 2) is None
    assert qq.kth_root(qq(-4), 2) is None


def test_random_elements_in_range(rng):
    f5 = Field.prime(5)
    values = {f5.residue(f5.random_element(rng)) for _ in range(200)}
    assert values == {0, 1, 2, 3, 4}
    assert all(f5.random_nonzero(rng) for _ in range(50))
