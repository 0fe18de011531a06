import pytest

from src.cli.acceptance import random_word, word_lemma_holds
from src.utils.errors import DomainViolationError
from src.words.periodic import (OmegaClass, Ordering, brute_force_inf_cmp, inf_cmp, is_primitive,
                                natural_order, primitive_root)


def test_primitive_root():
    assert primitive_root((0, 1, 0, 1)) == ((0, 1), 2)
    assert primitive_root((0, 0, 1)) == ((0, 0, 1), 1)
    assert primitive_root((1, 1, 1)) == ((1,), 3)
    assert is_primitive((0, 1, 0))
    with pytest.raises(DomainViolationError):
        primitive_root(())


def test_inf_cmp_examples():
    assert inf_cmp((0, 1), (0, 0, 1)) is Ordering.GT
    assert inf_cmp((0, 0, 1), (0, 1)) is Ordering.LT
    assert inf_cmp((0, 1), (0, 1, 0, 1)) is Ordering.EQ
    assert inf_cmp((0, 1), (0, 0, 1), order=(1, 0)) is Ordering.LT
    assert inf_cmp((0, 1), (0, 0, 1), order=natural_order(2)) is Ordering.GT
    with pytest.raises(DomainViolationError):
        inf_cmp((), (0,))


def test_ordering_flip():
    assert Ordering.LT.flipped() is Ordering.GT
    assert Ordering.EQ.flipped() is Ordering.EQ


def test_agrees_with_long_prefix_oracle(rng):
    for _ in range(2000):
        s = int(rng.integers(1, 4))
        u, v = random_word(rng, s, 1, 8), random_word(rng, s, 1, 8)
        assert inf_cmp(u, v) is brute_force_inf_cmp(u, v)
        assert inf_cmp(v, u) is inf_cmp(u, v).flipped()


def test_periodic_word_lemma(rng):
    for _ in range(2000):
        s = int(rng.integers(1, 4))
        u, v = random_word(rng, s, 1, 8), random_word(rng, s, 1, 8)
        assert word_lemma_holds(u, v)


def test_omega_class():
    z = OmegaClass.of((0, 1, 0, 1))
    assert z.primitive == (0, 1)
    assert z.to_text() == '(z0 z1)^inf'
    assert z.compare_word((0, 1, 0, 1, 0, 1)) is Ordering.EQ
    assert z.compare(OmegaClass.of((1,))) is Ordering.LT
    with pytest.raises(DomainViolationError):
        OmegaClass((0, 0))


def test_incomplete_variable_order():
    with pytest.raises(DomainViolationError):
        inf_cmp((0, 2), (0, 1), order=(1, 0))
    with pytest.raises(DomainViolationError):
        inf_cmp((0, 1), (1,), order=(1, 1, 0))
