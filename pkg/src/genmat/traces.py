"""Trazas de palabras, conjugación simultánea y matrices triangulares estrictas."""

import logging
from typing import Sequence, Tuple

from .matrices import (ConcreteMatrix, GenericMatrix, evaluate_concrete, evaluate_generic,
                       strict_upper_generators, trial_rng)
from ..algebra.field import Field, Scalar
from ..algebra.freepoly import FreePoly
from ..utils.errors import DomainViolationError, StructureMismatchError
from ..utils.settings import Defaults

logger = logging.getLogger(__name__)


def word_trace(w: Sequence[int], mats: Sequence[ConcreteMatrix]) -> Scalar:
    """Traza del producto de las matrices a lo largo de la palabra w.

    Args:
        w: Palabra (índices de generador)
        mats: Matrices de un mismo orden n

    Returns:
        tr(mats[w0]·mats[w1]·…); n para la palabra vacía

    Raises:
        DomainViolationError: Si algún índice no tiene matriz
    """
    if not mats:
        raise StructureMismatchError("se necesita al menos una matriz")
    field, n = mats[0].field, mats[0].order
    if any(m.order != n or m.field != field for m in mats):
        raise StructureMismatchError("las matrices deben compartir orden y cuerpo")
    product = ConcreteMatrix.identity(field, n)
    for letter in w:
        if letter < 0 or letter >= len(mats):
            raise DomainViolationError(f"índice de generador {letter} fuera de rango")
        product = product * mats[letter]
    return product.trace()


def conjugate(mats: Sequence[ConcreteMatrix], b: ConcreteMatrix) -> Tuple[ConcreteMatrix, ...]:
    """Conjugación simultánea M ↦ B·M·B⁻¹."""
    b_inv = b.inverse()
    return tuple(b * m * b_inv for m in mats)


def random_invertible(field: Field, n: int, rng) -> ConcreteMatrix:
    while True:
        candidate = ConcreteMatrix.random(field, n, rng)
        if candidate.determinant():
            return candidate


def trace_axioms_hold(a: ConcreteMatrix, b: ConcreteMatrix) -> bool:
    """tr(ab) = tr(ba), a·tr(b) = tr(b)·a y tr(tr(a)·b) = tr(a)·tr(b)."""
    field, n = a.field, a.order
    tr_b = ConcreteMatrix.identity(field, n).scale(b.trace())
    return ((a * b).trace() == (b * a).trace()
            and a * tr_b == tr_b * a
            and b.scale(a.trace()).trace() == a.trace() * b.trace())


def shared_eigenbasis_pair(n: int, q: int, rng) -> Tuple[ConcreteMatrix, ConcreteMatrix]:
    """A = S·D₁·S⁻¹ y B = S·D₂·S⁻¹ con D₁, D₂ diagonales y S invertible al azar."""
    field = Field.prime(q)
    s = random_invertible(field, n, rng)
    s_inv = s.inverse()
    d1 = ConcreteMatrix.diagonal(field, [field.random_element(rng) for _ in range(n)])
    d2 = ConcreteMatrix.diagonal(field, [field.random_element(rng) for _ in range(n)])
    return s * d1 * s_inv, s * d2 * s_inv


def ut_eval(f: FreePoly, n: int, seed: int = Defaults.DEFAULT_SEED,
            q: int = Defaults.DEFAULT_PRIME) -> ConcreteMatrix:
    """Evalúa f en s matrices aleatorias estrictamente triangulares superiores.

    El resultado es triangular superior con diagonal igual al término
    independiente de f; las palabras de longitud >= n se anulan.
    """
    field = Field.prime(q)
    rng = trial_rng(seed, 0)
    mats = [ConcreteMatrix.random(field, n, rng, strictly_upper=True) for _ in range(f.alphabet_size)]
    return evaluate_concrete(f.change_field(field), mats)


def ut_symbolic(f: FreePoly, n: int) -> GenericMatrix:
    """Imagen de f en las matrices genéricas estrictamente triangulares (U_s)."""
    return evaluate_generic(f, strict_upper_generators(n, f.alphabet_size, f.field))
