"""Polinomios en una variable con coeficientes en un anillo conmutativo.

Los coeficientes pueden ser escalares (imagen k[v] del cociente de Bergman,
polinomios mínimos) o CommPoly (polinomio característico genérico). Solo se
exige que soporten +, -, * y la prueba de nulidad por bool().
"""

from typing import Any, Callable, List, Sequence, Tuple

from .freepoly import MINUS_INFINITY
from .field import Field


class UniPoly:
    """Polinomio univariado inmutable; coeficientes de grado bajo a alto."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Sequence[Any] = ()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs: Tuple[Any, ...] = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def leading_coefficient(self):
        return self.coeffs[-1]

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def __add__(self, other: 'UniPoly') -> 'UniPoly':
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: 'UniPoly') -> 'UniPoly':
        return self + (-other)

    def __mul__(self, other: 'UniPoly') -> 'UniPoly':
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                term = a * b
                out[i + j] = term if out[i + j] is None else out[i + j] + term
        return UniPoly(out)

    def map(self, fn: Callable[[Any], Any]) -> 'UniPoly':
        return UniPoly([fn(c) for c in self.coeffs])

    def derivative(self) -> 'UniPoly':
        return UniPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, point, one):
        """Evalúa por Horner en un anillo que contiene a los coeficientes.

        Args:
            point: Elemento del anillo de evaluación (p. ej. FreePoly h)
            one: Unidad de ese anillo; sus múltiplos escalares dan las constantes

        Returns:
            q(point)
        """
        result = one - one
        for c in reversed(self.coeffs):
            result = result * point + one * c
        return result

    def to_list(self, to_json: Callable[[Any], Any]) -> List[Any]:
        return [to_json(c) for c in self.coeffs]

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"


def monomial(coeff, exponent: int, zero) -> UniPoly:
    """c·t^e sobre el anillo cuyo cero es `zero`."""
    return UniPoly([zero] * exponent + [coeff])


# ----------------------------------------------------------------------
# Puente con sympy.polys.galoistools (listas densas de enteros, grado alto primero)
# ----------------------------------------------------------------------
def to_gf_list(poly: UniPoly, field: Field) -> List[int]:
    return [field.residue(c) for c in reversed(poly.coeffs)]


def from_gf_list(values: Sequence[int], field: Field) -> UniPoly:
    return UniPoly([field(int(v)) for v in reversed(values)])
