import pytest

from src.algebra.field import Field
from src.genmat.matrices import ConcreteMatrix
from src.genmat.traces import (conjugate, random_invertible, shared_eigenbasis_pair, trace_axioms_hold,
                               ut_eval, ut_symbolic, word_trace)
from src.utils.errors import DomainViolationError


def _mats(field, rng, count=2, n=3):
    return [ConcreteMatrix.random(field, n, rng) for _ in range(count)]


def test_empty_word_has_trace_n(rng):
    f7 = Field.prime(7)
    assert word_trace((), _mats(f7, rng)) == f7(3)


def test_trace_is_cyclic(rng):
    field = Field.prime(101)
    mats = _mats(field, rng)
    assert word_trace((0, 1, 1), mats) == word_trace((1, 1, 0), mats)
    assert word_trace((0, 0, 1, 0), mats) == word_trace((0, 1, 0, 0), mats)


def test_trace_is_conjugation_invariant(rng):
    field = Field.prime(101)
    mats = _mats(field, rng)
    conj = conjugate(mats, random_invertible(field, 3, rng))
    for w in [(0,), (0, 1), (1, 0, 1, 1), (0, 0, 1)]:
        assert word_trace(w, conj) == word_trace(w, mats)


def test_trace_axioms(rng):
    field = Field.prime(101)
    for _ in range(10):
        a, b = _mats(field, rng)
        assert trace_axioms_hold(a, b)


def test_shared_eigenbasis_pair_commutes(rng):
    a, b = shared_eigenbasis_pair(3, 101, rng)
    assert a * b == b * a


def test_index_out_of_range(rng):
    f7 = Field.prime(7)
    with pytest.raises(DomainViolationError):
        word_trace((2,), _mats(f7, rng))


def test_upper_triangular_evaluation(xy, fp):
    x, y = xy
    assert ut_eval(x * y, 3).trace() == fp(0)
    assert ut_eval(x * y + 3, 3).trace() == fp(9)
    assert ut_eval(x * y * x, 3).is_zero()
    assert ut_eval(x * y + y * x * y, 3).is_strictly_upper()


def test_upper_triangular_evaluation_is_multiplicative(xy):
    x, y = xy
    g = x + y * x + 2
    for k in range(1, 4):
        assert ut_eval(g, 4, seed=9) ** k == ut_eval(g ** k, 4, seed=9)


def test_symbolic_upper_triangular(xy):
    x, y = xy
    assert not ut_symbolic(x * y, 3).is_zero()
    assert ut_symbolic(x * y * x, 3).is_zero()
