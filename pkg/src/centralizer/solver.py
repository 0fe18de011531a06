"""Centralizador C(f; F_s) truncado en grado D.

Las incógnitas son las palabras de longitud <= D en orden deglex creciente;
la imagen de cada palabra w es el conmutador exacto [f, w], de modo que el
sistema incluye todas las restricciones hasta grado D + deg f. Insertar las
columnas en orden da directamente una base del núcleo cuya palabra líder
es la última columna de cada combinación.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List

from ..algebra.freepoly import FreePoly, Word, all_words, commutator, deglex_key
from ..algebra.linalg import EchelonBasis
from ..utils.errors import DomainViolationError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass
class GradedBasis:
    """Base del centralizador agrupada por grado.

    Cada elemento es mónico y las palabras líderes son distintas. Cada
    elemento está reducido contra los anteriores: no contiene la palabra
    líder de ninguno de ellos. Los anteriores no se reducen contra los
    posteriores.
    """

    f: FreePoly
    bound: int
    by_degree: Dict[int, List[FreePoly]] = dc_field(default_factory=dict)

    def elements(self) -> List[FreePoly]:
        """Todos los elementos en orden de palabra líder creciente."""
        return [g for d in sorted(self.by_degree) for g in self.by_degree[d]]

    def nonscalar(self) -> List[FreePoly]:
        return [g for g in self.elements() if not g.is_scalar()]

    def dimension(self, d: int) -> int:
        """dim C ∩ (grado <= d)."""
        return sum(len(items) for degree, items in self.by_degree.items() if degree <= d)

    def dimensions(self) -> List[int]:
        return [self.dimension(d) for d in range(self.bound + 1)]

    def to_json(self) -> List[list]:
        return [[d, [g.to_text() for g in self.by_degree[d]]] for d in sorted(self.by_degree)]

    def __len__(self):
        return sum(len(items) for items in self.by_degree.values())


def check_centralizer_preconditions(f: FreePoly, bound: int):
    """Valida f no escalar, D >= 1 y p > D + deg f.

    Raises:
        DomainViolationError: Si f es escalar o D < 1
        PreconditionError: Si la característica es demasiado pequeña
    """
    if f.is_scalar():
        raise DomainViolationError("f debe ser un elemento no escalar")
    if bound < 1:
        raise DomainViolationError(f"el grado máximo debe ser >= 1 (D = {bound})")
    p = f.field.characteristic
    if p and p <= bound + f.degree:
        logger.warning("característica %d <= D + deg f = %d", p, bound + f.degree)
        raise PreconditionError(
            f"se requiere p > D + deg f (p = {p}, D = {bound}, deg f = {f.degree})", f.to_text())


def _fully_reduce(g: FreePoly, leaders: Dict[Word, FreePoly]) -> FreePoly:
    # elimina de g las palabras líderes de elementos anteriores
    lead = g.leading_word
    while True:
        hits = [w for w in g.words() if w != lead and w in leaders]
        if not hits:
            return g
        w = max(hits, key=deglex_key)
        g = g - leaders[w].scale(g.coefficient(w))


def centralizer_basis(f: FreePoly, bound: int) -> GradedBasis:
    """Base exacta de C(f; F_s) ∩ (grado <= D).

    Args:
        f: Elemento no escalar
        bound: Grado máximo D (>= 1)

    Returns:
        GradedBasis con los elementos agrupados por el grado de su palabra líder

    Raises:
        DomainViolationError: Si f es escalar
        PreconditionError: Si p <= D + deg f
    """
    check_centralizer_preconditions(f, bound)
    field, s = f.field, f.alphabet_size
    echelon = EchelonBasis(field, key=deglex_key)
    leaders: Dict[Word, FreePoly] = {}
    basis = GradedBasis(f, bound)
    for d in range(bound + 1):
        found = 0
        for word in all_words(s, d):
            image = commutator(f, FreePoly.monomial(field, s, word)).as_dict()
            combo = echelon.insert(image, word)
            if combo is None:
                continue
            g = _fully_reduce(FreePoly(field, s, combo), leaders)
            leaders[g.leading_word] = g
            basis.by_degree.setdefault(d, []).append(g)
            found += 1
        logger.debug("centralizador de %s: grado %d, %d elementos nuevos", f, d, found)
    logger.info("centralizador de %s hasta grado %d: dimensión %d", f, bound, len(basis))
    return basis


def is_in_centralizer(g: FreePoly, f: FreePoly) -> bool:
    """[f, g] = 0 exactamente."""
    return not commutator(f, g)
