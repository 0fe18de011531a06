import pytest

from src.algebra.commpoly import CommPoly, cp_eval, cp_mul, var_text
from src.algebra.field import Field
from src.utils.errors import DomainViolationError, StructureMismatchError

A, B, C = (0, 0, 0), (0, 0, 1), (0, 1, 1)


def test_product_of_distinct_variables():
    f7 = Field.prime(7)
    p = cp_mul(CommPoly.variable(f7, A), CommPoly.variable(f7, C))
    assert p.terms() == [(((A, 1), (C, 1)), f7(1))]


def test_binomial_square():
    qq = Field.rational()
    a, b = CommPoly.variable(qq, A), CommPoly.variable(qq, B)
    assert (a + b) ** 2 == a ** 2 + b ** 2 + (a * b).scale(2)
    assert cp_mul(a, b) == cp_mul(b, a)


def test_frobenius_over_f2():
    f2 = Field.prime(2)
    a, b = CommPoly.variable(f2, A), CommPoly.variable(f2, B)
    assert (a + b) ** 2 == a ** 2 + b ** 2


def test_evaluation():
    f7 = Field.prime(7)
    p = CommPoly.variable(f7, A) + CommPoly.variable(f7, B)
    assert cp_eval(p, {A: f7(2), B: f7(3)}) == f7(5)
    assert cp_eval(CommPoly.constant(f7, 4), {}) == f7(4)


def test_missing_assignment_names_variable():
    f7 = Field.prime(7)
    with pytest.raises(DomainViolationError, match=var_text(B)):
        cp_eval(CommPoly.variable(f7, B), {A: f7(1)})


def test_field_mismatch():
    with pytest.raises(StructureMismatchError):
        cp_mul(CommPoly.variable(Field.prime(7), A), CommPoly.variable(Field.prime(5), A))


def test_evaluation_is_a_homomorphism(rng):
    f = Field.prime(101)
    variables = [A, B, C]

    def random_comm():
        p = CommPoly.zero(f)
        for _ in range(3):
            term = CommPoly.constant(f, int(rng.integers(1, 101)))
            for var in variables:
                term = term * CommPoly.variable(f, var) ** int(rng.integers(0, 3))
            p = p + term
        return p

    for _ in range(200):
        p, q = random_comm(), random_comm()
        point = {v: f(int(rng.integers(0, 101))) for v in variables}
        assert cp_eval(p * q, point) == cp_eval(p, point) * cp_eval(q, point)
        assert cp_eval(p + q, point) == cp_eval(p, point) + cp_eval(q, point)
        assert p * q == q * p
