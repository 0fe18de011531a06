"""Subálgebra R_(z), ideal I_(z) y la proyección de Bergman a k[v].

R_(z) está generado por 1 y las palabras u con u^∞ ≤ z; I_(z) por las
palabras con u^∞ < z. El cociente R_(z)/I_(z) es el anillo de polinomios
k[v], donde v es la imagen de la raíz primitiva de z.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from .periodic import OmegaClass, Ordering
from ..algebra.freepoly import FreePoly, Word, word_text
from ..algebra.unipoly import UniPoly
from ..utils.errors import DomainViolationError, PreconditionError

logger = logging.getLogger(__name__)


class RzMembership(str, Enum):
    """Posición de una palabra respecto de z."""

    UNIT = 'unit'
    IN_IDEAL = 'in_ideal'
    ON_BOUNDARY = 'on_boundary'
    OUTSIDE = 'outside'


def in_Rz(w: Sequence[int], z: OmegaClass) -> RzMembership:
    """Clasifica una palabra respecto de R_(z) e I_(z)."""
    if not w:
        return RzMembership.UNIT
    cmp = z.compare_word(w)
    if cmp is Ordering.LT:
        return RzMembership.IN_IDEAL
    if cmp is Ordering.EQ:
        return RzMembership.ON_BOUNDARY
    return RzMembership.OUTSIDE


def bergman_quotient(f: FreePoly, z: OmegaClass) -> UniPoly:
    """Imagen de f ∈ R_(z) en R_(z)/I_(z) ≅ k[v].

    La palabra r^m (r raíz de z) va a v^m, las de I_(z) a cero y las
    constantes se conservan.

    Raises:
        PreconditionError: Si alguna palabra del soporte está fuera de R_(z)
    """
    field = f.field
    coeffs = {}
    for word, coeff in f.terms():
        kind = in_Rz(word, z)
        if kind is RzMembership.OUTSIDE:
            raise PreconditionError(
                f"la palabra {word_text(word)} no pertenece a R_(z) para z = {z.to_text()}", word)
        if kind is RzMembership.IN_IDEAL:
            continue
        if kind is RzMembership.UNIT:
            exponent = 0
        else:
            # w y z comparten raíz primitiva: w = r^m
            exponent = len(word) // len(z.primitive)
        coeffs[exponent] = coeffs.get(exponent, field.zero) + coeff
    if not coeffs:
        return UniPoly()
    top = max(coeffs)
    return UniPoly([coeffs.get(i, field.zero) for i in range(top + 1)])


@dataclass(frozen=True)
class BergmanProjection:
    """Resultado de la proyección: la clase z y las imágenes en k[v]."""

    z: OmegaClass
    images: Tuple[UniPoly, ...]

    def is_nontrivial(self) -> bool:
        return any(not image.is_constant() for image in self.images)

    def to_dict(self, field) -> dict:
        return {
            'z': self.z.to_text(),
            'images': [image.to_list(field.to_json) for image in self.images],
            'nontrivial': self.is_nontrivial(),
        }


def bergman_projection(generators: Sequence[FreePoly],
                       order: Optional[Sequence[int]] = None) -> BergmanProjection:
    """Homomorfismo de la subálgebra generada por G en k[v] no trivial.

    z es el máximo de u^∞ sobre todas las palabras u ≠ 1 del soporte de G.

    Args:
        generators: Conjunto finito G con algún elemento no constante
        order: Orden total del alfabeto (None = natural)

    Returns:
        BergmanProjection con z e imágenes

    Raises:
        DomainViolationError: Si todos los generadores son constantes
    """
    best: Optional[Word] = None
    order_t = tuple(order) if order is not None else None
    for g in generators:
        for word in g.words():
            if not word:
                continue
            if best is None:
                best = word
                continue
            z_best = OmegaClass.of(best, order_t)
            if z_best.compare_word(word) is Ordering.GT:
                best = word
    if best is None:
        raise DomainViolationError("todos los generadores son constantes")
    z = OmegaClass.of(best, order_t)
    images = tuple(bergman_quotient(g, z) for g in generators)
    logger.debug("proyección de Bergman: z = %s", z.to_text())
    return BergmanProjection(z, images)
