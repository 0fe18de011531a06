"""Polinomios conmutativos dispersos sobre el cuerpo base.

Son las entradas de las matrices genéricas: polinomios en las variables
x_ij^(ν), identificadas por la terna (ν, i, j).
"""

from typing import Dict, Iterable, Mapping, Set, Tuple

from .field import Field, Scalar
from ..utils.errors import DomainViolationError, StructureMismatchError

VarId = Tuple[int, int, int]
# Monomio: tupla ordenada de pares (variable, exponente > 0)
Monomial = Tuple[Tuple[VarId, int], ...]

ONE_MONOMIAL: Monomial = ()


def var_text(var: VarId) -> str:
    """Ortografía textual 'x{ν}_{i}{j}'."""
    nu, i, j = var
    return f"x{nu}_{i}{j}"


def _merge(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


class CommPoly:
    """Polinomio conmutativo inmutable con soporte disperso."""

    __slots__ = ('field', '_terms', '_hash')

    def __init__(self, field: Field, terms: Mapping[Monomial, Scalar] = None):
        self.field = field
        self._terms: Dict[Monomial, Scalar] = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def zero(cls, field: Field) -> 'CommPoly':
        return cls(field)

    @classmethod
    def constant(cls, field: Field, value) -> 'CommPoly':
        return cls(field, {ONE_MONOMIAL: field(value)})

    @classmethod
    def one(cls, field: Field) -> 'CommPoly':
        return cls.constant(field, 1)

    @classmethod
    def variable(cls, field: Field, var: VarId) -> 'CommPoly':
        return cls(field, {((tuple(var), 1),): field.one})

    def terms(self):
        return list(self._terms.items())

    def variables(self) -> Set[VarId]:
        return {var for mono in self._terms for var, _ in mono}

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    @property
    def constant_term(self) -> Scalar:
        return self._terms.get(ONE_MONOMIAL, self.field.zero)

    def _coerce(self, other) -> 'CommPoly':
        if isinstance(other, CommPoly):
            if other.field != self.field:
                raise StructureMismatchError(f"cuerpos distintos: {self.field} y {other.field}")
            return other
        return CommPoly.constant(self.field, other)

    def __add__(self, other):
        other = self._coerce(other)
        result = dict(self._terms)
        zero = self.field.zero
        for m, c in other._terms.items():
            result[m] = result.get(m, zero) + c
        return CommPoly(self.field, result)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly(self.field, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, value) -> 'CommPoly':
        value = self.field(value)
        return CommPoly(self.field, {m: c * value for m, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CommPoly):
            return self.scale(other)
        return cp_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int):
        result = CommPoly.one(self.field)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, CommPoly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, int):
            return self == CommPoly.constant(self.field, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def to_text(self) -> str:
        if not self._terms:
            return '0'
        pieces = []
        for mono, coeff in sorted(self._terms.items(), key=lambda t: (-sum(e for _, e in t[0]), t[0])):
            factors = [var_text(v) if e == 1 else f"{var_text(v)}^{e}" for v, e in mono]
            coeff_text = self.field.to_text(coeff)
            if not factors:
                pieces.append(coeff_text)
            elif coeff_text == '1':
                pieces.append('*'.join(factors))
            else:
                pieces.append(f"{coeff_text}*{'*'.join(factors)}")
        return ' + '.join(pieces)

    def __repr__(self):
        return f"CommPoly({self.to_text()!r})"


def cp_mul(a: CommPoly, b: CommPoly) -> CommPoly:
    """Producto conmutativo.

    Raises:
        StructureMismatchError: Si los cuerpos difieren
    """
    b = a._coerce(b)
    result: Dict[Monomial, Scalar] = {}
    zero = a.field.zero
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            m = _merge(ma, mb)
            result[m] = result.get(m, zero) + ca * cb
    return CommPoly(a.field, result)


def cp_eval(p: CommPoly, point: Mapping[VarId, Scalar]) -> Scalar:
    """Evalúa p en un punto.

    Args:
        p: Polinomio
        point: Asignación variable -> escalar del mismo cuerpo

    Returns:
        El valor exacto

    Raises:
        DomainViolationError: Si falta alguna variable
    """
    total = p.field.zero
    for mono, coeff in p._terms.items():
        value = coeff
        for var, e in mono:
            if var not in point:
                raise DomainViolationError(f"falta asignar la variable {var_text(var)}")
            value = value * p.field(point[var]) ** e
        total = total + value
    return total


def cp_sum(field: Field, items: Iterable[CommPoly]) -> CommPoly:
    acc: Dict[Monomial, Scalar] = {}
    zero = field.zero
    for item in items:
        for m, c in item._terms.items():
            acc[m] = acc.get(m, zero) + c
    return CommPoly(field, acc)
