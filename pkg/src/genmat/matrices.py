"""Matrices genéricas, matrices concretas y el homomorfismo canónico π.

GenericMatrix tiene entradas CommPoly en las variables x_ij^(ν);
ConcreteMatrix tiene entradas escalares de un cuerpo. Ambas comparten la
misma evaluación de polinomios libres por productos de prefijos.
"""

import logging
from typing import Dict, Iterable, List, Mapping, Sequence, Set, Tuple, TypeVar

import numpy as np
from sympy.polys.matrices import DomainMatrix

from ..algebra.commpoly import CommPoly, VarId, cp_eval, cp_sum
from ..algebra.field import Field, Scalar
from ..algebra.freepoly import EMPTY_WORD, FreePoly, Word
from ..utils.errors import DomainViolationError, StructureMismatchError

logger = logging.getLogger(__name__)


class GenericMatrix:
    """Matriz n×n con entradas en k[x_ij^(ν)]."""

    __slots__ = ('field', 'order', 'rows')

    def __init__(self, field: Field, rows: Sequence[Sequence[CommPoly]]):
        self.field = field
        self.order = len(rows)
        self.rows: Tuple[Tuple[CommPoly, ...], ...] = tuple(tuple(r) for r in rows)
        if any(len(r) != self.order for r in self.rows):
            raise StructureMismatchError("la matriz debe ser cuadrada")

    @classmethod
    def identity(cls, field: Field, n: int) -> 'GenericMatrix':
        one, zero = CommPoly.one(field), CommPoly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, n: int) -> 'GenericMatrix':
        zero = CommPoly.zero(field)
        return cls(field, [[zero] * n for _ in range(n)])

    def _check(self, other: 'GenericMatrix'):
        if self.field != other.field or self.order != other.order:
            raise StructureMismatchError("matrices de cuerpo u orden distintos")

    def __add__(self, other: 'GenericMatrix') -> 'GenericMatrix':
        self._check(other)
        return GenericMatrix(self.field, [[a + b for a, b in zip(ra, rb)]
                                          for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: 'GenericMatrix') -> 'GenericMatrix':
        return self + other.scale(-1)

    def scale(self, value) -> 'GenericMatrix':
        return GenericMatrix(self.field, [[a.scale(value) for a in row] for row in self.rows])

    def __mul__(self, other: 'GenericMatrix') -> 'GenericMatrix':
        self._check(other)
        n = self.order
        cols = list(zip(*other.rows))
        return GenericMatrix(self.field, [
            [cp_sum(self.field, (row[k] * cols[j][k] for k in range(n) if row[k] and cols[j][k]))
             for j in range(n)]
            for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, GenericMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return not any(any(bool(a) for a in row) for row in self.rows)

    def trace(self) -> CommPoly:
        return cp_sum(self.field, (self.rows[i][i] for i in range(self.order)))

    def variables(self) -> Set[VarId]:
        out: Set[VarId] = set()
        for row in self.rows:
            for entry in row:
                out |= entry.variables()
        return out

    def to_json(self) -> List[List[str]]:
        return [[entry.to_text() for entry in row] for row in self.rows]


class ConcreteMatrix:
    """Matriz n×n con entradas escalares de un cuerpo."""

    __slots__ = ('field', 'order', 'rows')

    def __init__(self, field: Field, rows: Sequence[Sequence[Scalar]]):
        self.field = field
        self.order = len(rows)
        self.rows: Tuple[Tuple[Scalar, ...], ...] = tuple(tuple(field(a) for a in r) for r in rows)
        if any(len(r) != self.order for r in self.rows):
            raise StructureMismatchError("la matriz debe ser cuadrada")

    @classmethod
    def identity(cls, field: Field, n: int) -> 'ConcreteMatrix':
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, n: int) -> 'ConcreteMatrix':
        return cls(field, [[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, field: Field, values: Sequence) -> 'ConcreteMatrix':
        n = len(values)
        return cls(field, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def random(cls, field: Field, n: int, rng, strictly_upper: bool = False) -> 'ConcreteMatrix':
        """Matriz de entradas i.i.d. uniformes (o acotadas sobre ℚ)."""
        return cls(field, [[field.random_element(rng) if (not strictly_upper or j > i) else field.zero
                            for j in range(n)] for i in range(n)])

    @classmethod
    def from_array(cls, field: Field, array: np.ndarray) -> 'ConcreteMatrix':
        return cls(field, [[int(v) for v in row] for row in array])

    def _check(self, other: 'ConcreteMatrix'):
        if self.field != other.field or self.order != other.order:
            raise StructureMismatchError("matrices de cuerpo u orden distintos")

    def __add__(self, other: 'ConcreteMatrix') -> 'ConcreteMatrix':
        self._check(other)
        return ConcreteMatrix(self.field, [[a + b for a, b in zip(ra, rb)]
                                           for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: 'ConcreteMatrix') -> 'ConcreteMatrix':
        self._check(other)
        return ConcreteMatrix(self.field, [[a - b for a, b in zip(ra, rb)]
                                           for ra, rb in zip(self.rows, other.rows)])

    def scale(self, value) -> 'ConcreteMatrix':
        value = self.field(value)
        return ConcreteMatrix(self.field, [[a * value for a in row] for row in self.rows])

    def __mul__(self, other: 'ConcreteMatrix') -> 'ConcreteMatrix':
        self._check(other)
        cols = list(zip(*other.rows))
        zero = self.field.zero
        out = []
        for row in self.rows:
            line = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                line.append(acc)
            out.append(line)
        return ConcreteMatrix(self.field, out)

    def __pow__(self, exponent: int) -> 'ConcreteMatrix':
        result = ConcreteMatrix.identity(self.field, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, ConcreteMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return not any(any(bool(a) for a in row) for row in self.rows)

    def is_strictly_upper(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.order) for j in range(i + 1))

    def trace(self) -> Scalar:
        acc = self.field.zero
        for i in range(self.order):
            acc = acc + self.rows[i][i]
        return acc

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.rows], (self.order, self.order), self.field.domain)

    def inverse(self) -> 'ConcreteMatrix':
        """Inversa exacta (vía DomainMatrix)."""
        if not self.to_domain_matrix().det():
            raise DomainViolationError("la matriz no es invertible")
        return ConcreteMatrix(self.field, self.to_domain_matrix().inv().to_list())

    def determinant(self) -> Scalar:
        return self.to_domain_matrix().det()

    def to_array(self) -> np.ndarray:
        """Residuos como arreglo int64 (solo cuerpos primos)."""
        return np.array([[self.field.residue(a) for a in row] for row in self.rows], dtype=np.int64)

    def to_json(self):
        """Filas con residuos (o 'n/d' sobre ℚ)."""
        if self.field.is_prime_field:
            return [[self.field.residue(a) for a in row] for row in self.rows]
        return [[self.field.to_json(a) for a in row] for row in self.rows]

    def __repr__(self):
        return f"ConcreteMatrix({self.to_json()!r}, {self.field.descriptor})"


M = TypeVar('M')


def evaluate_words(f: FreePoly, images: Sequence[M], identity: M, zero: M) -> M:
    """Evalúa f sustituyendo z_i por images[i] en un álgebra de matrices.

    Los productos de prefijos se memorizan, por lo que palabras con prefijos
    comunes comparten productos.
    """
    if len(images) < f.alphabet_size:
        raise StructureMismatchError(
            f"se necesitan {f.alphabet_size} matrices, se recibieron {len(images)}")
    cache: Dict[Word, M] = {EMPTY_WORD: identity}

    def product(word: Word) -> M:
        if word not in cache:
            cache[word] = product(word[:-1]) * images[word[-1]]
        return cache[word]

    result = zero
    for word, coeff in f.terms():
        result = result + product(word).scale(coeff)
    return result


def generic_generators(n: int, s: int, field: Field) -> List[GenericMatrix]:
    """Las s matrices genéricas X_ν con entradas x_ij^(ν) distintas.

    Args:
        n: Orden (n >= 1)
        s: Número de generadores (s >= 1)
        field: Cuerpo base
    """
    if n < 1 or s < 1:
        raise DomainViolationError("se requiere n >= 1 y s >= 1")
    return [GenericMatrix(field, [[CommPoly.variable(field, (nu, i, j)) for j in range(n)]
                                  for i in range(n)])
            for nu in range(s)]


def strict_upper_generators(n: int, s: int, field: Field) -> List[GenericMatrix]:
    """Matrices genéricas estrictamente triangulares superiores (U_s simbólico)."""
    zero = CommPoly.zero(field)
    return [GenericMatrix(field, [[CommPoly.variable(field, (nu, i, j)) if j > i else zero
                                   for j in range(n)] for i in range(n)])
            for nu in range(s)]


def pi_map(f: FreePoly, n: int) -> GenericMatrix:
    """Homomorfismo canónico π: F_s → k{X} evaluando en las matrices genéricas."""
    logger.debug("π sobre matrices %dx%d: %d palabras", n, n, len(f))
    gens = generic_generators(n, f.alphabet_size, f.field)
    return evaluate_words(f, gens, GenericMatrix.identity(f.field, n), GenericMatrix.zeros(f.field, n))


def evaluate_generic(f: FreePoly, gens: Sequence[GenericMatrix]) -> GenericMatrix:
    n = gens[0].order
    return evaluate_words(f, gens, GenericMatrix.identity(f.field, n), GenericMatrix.zeros(f.field, n))


def evaluate_concrete(f: FreePoly, mats: Sequence[ConcreteMatrix]) -> ConcreteMatrix:
    """Evalúa f en matrices concretas del mismo cuerpo que f."""
    if not mats:
        raise StructureMismatchError("se necesita al menos una matriz")
    field, n = mats[0].field, mats[0].order
    if f.field != field:
        f = f.change_field(field)
    return evaluate_words(f, mats, ConcreteMatrix.identity(field, n), ConcreteMatrix.zeros(field, n))


def specialize(matrix: GenericMatrix, point: Mapping[VarId, Scalar]) -> ConcreteMatrix:
    """Evaluación entrada a entrada en un punto.

    Raises:
        DomainViolationError: Si falta asignar alguna variable
    """
    return ConcreteMatrix(matrix.field, [[cp_eval(entry, point) for entry in row]
                                         for row in matrix.rows])


def point_from_matrices(mats: Sequence[ConcreteMatrix]) -> Dict[VarId, Scalar]:
    """Punto x_ij^(ν) ↦ mats[ν][i][j]."""
    return {(nu, i, j): m.rows[i][j]
            for nu, m in enumerate(mats) for i in range(m.order) for j in range(m.order)}


def random_point(variables: Iterable[VarId], field: Field, rng) -> Dict[VarId, Scalar]:
    return {var: field.random_element(rng) for var in sorted(variables)}


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Generador de la prueba `index`: semilla derivada seed + index.

    Raises:
        DomainViolationError: Si la semilla es negativa
    """
    if seed < 0:
        raise DomainViolationError(f"la semilla debe ser no negativa (seed = {seed})")
    return np.random.default_rng(seed + index)
