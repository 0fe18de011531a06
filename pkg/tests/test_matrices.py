import numpy as np
import pytest

from src.algebra.field import Field
from src.algebra.freepoly import FreePoly, commutator
from src.cli.acceptance import random_poly
from src.genmat.matrices import (ConcreteMatrix, GenericMatrix, evaluate_concrete, generic_generators,
                                 pi_map, point_from_matrices, specialize, strict_upper_generators,
                                 trial_rng)
from src.utils.errors import DomainViolationError, StructureMismatchError


def test_generic_generators_have_distinct_variables(fp):
    gens = generic_generators(3, 2, fp)
    variables = set()
    for g in gens:
        variables |= g.variables()
    assert len(variables) == 18
    with pytest.raises(DomainViolationError):
        generic_generators(0, 2, fp)


def test_strict_upper_generators(fp):
    (u,) = strict_upper_generators(3, 1, fp)
    assert len(u.variables()) == 3
    assert (u * u * u).is_zero()


def test_pi_of_generator_is_generic_matrix(xy):
    x, y = xy
    assert pi_map(x, 2) == generic_generators(2, 2, x.field)[0]
    assert pi_map(x * 0, 2).is_zero()


def test_one_by_one_matrices_commute(xy):
    x, y = xy
    assert pi_map(commutator(x, y), 1).is_zero()
    assert not pi_map(commutator(x, y), 2).is_zero()


def test_generic_matrices_have_no_zero_divisors(xy, rng):
    x, y = xy
    assert not (pi_map(x, 2) * pi_map(y, 2)).is_zero()
    assert not pi_map(commutator(x, y) * commutator(x, y), 2).is_zero()
    field = Field.prime(101)
    for _ in range(100):
        a, b = random_poly(field, 2, rng, 3, 3), random_poly(field, 2, rng, 3, 3)
        pa, pb = pi_map(a, 2), pi_map(b, 2)
        if pa.is_zero() or pb.is_zero():
            continue
        assert not (pa * pb).is_zero()


def test_square_of_commutator_is_scalar(xy):
    x, y = xy
    m = pi_map(commutator(x, y) ** 2, 2)
    assert m.rows[0][1] == 0 and m.rows[1][0] == 0
    assert m.rows[0][0] == m.rows[1][1]


def test_pi_is_a_homomorphism(rng):
    field = Field.prime(101)
    for _ in range(5):
        f = random_poly(field, 2, rng, 2, 3)
        g = random_poly(field, 2, rng, 2, 3)
        assert pi_map(f * g, 2) == pi_map(f, 2) * pi_map(g, 2)
        assert pi_map(f + g, 2) == pi_map(f, 2) + pi_map(g, 2)


def test_specialization_matches_direct_evaluation(rng):
    field = Field.prime(101)
    for i in range(5):
        f = random_poly(field, 2, rng, 3, 4)
        mats = [ConcreteMatrix.random(field, 2, trial_rng(7, i)) for _ in range(2)]
        assert specialize(pi_map(f, 2), point_from_matrices(mats)) == evaluate_concrete(f, mats)


def test_evaluation_transports_the_field(qq):
    f = FreePoly.generator(qq, 1, 0).scale(qq(1) / qq(2))
    f7 = Field.prime(7)
    m = ConcreteMatrix.diagonal(f7, [2, 4])
    assert evaluate_concrete(f, [m]) == ConcreteMatrix.diagonal(f7, [1, 2])


def test_inverse_and_determinant():
    f7 = Field.prime(7)
    m = ConcreteMatrix(f7, [[1, 2], [3, 4]])
    assert m * m.inverse() == ConcreteMatrix.identity(f7, 2)
    assert m.determinant() == f7(-2)
    with pytest.raises(DomainViolationError):
        ConcreteMatrix(f7, [[1, 2], [2, 4]]).inverse()


def test_power_and_array_roundtrip():
    f7 = Field.prime(7)
    m = ConcreteMatrix(f7, [[0, 1], [0, 0]])
    assert (m ** 2).is_zero()
    assert m.is_strictly_upper()
    assert ConcreteMatrix.from_array(f7, m.to_array()) == m
    assert np.array_equal(m.to_array(), np.array([[0, 1], [0, 0]]))


def test_shape_mismatch():
    f7 = Field.prime(7)
    with pytest.raises(StructureMismatchError):
        ConcreteMatrix(f7, [[1, 2]])
    with pytest.raises(StructureMismatchError):
        ConcreteMatrix.identity(f7, 2) * ConcreteMatrix.identity(f7, 3)
    with pytest.raises(StructureMismatchError):
        GenericMatrix.identity(f7, 2) + GenericMatrix.identity(Field.prime(5), 2)


def test_negative_seed_is_rejected():
    with pytest.raises(DomainViolationError):
        trial_rng(-1, 0)
    assert trial_rng(3, 2).integers(0, 100) == trial_rng(5, 0).integers(0, 100)
