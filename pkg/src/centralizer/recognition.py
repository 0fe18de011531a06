"""Reconocimiento de C ∩ (grado <= D) como k[h] ∩ (grado <= D).

h es el elemento no escalar de grado mínimo de la base; cada elemento se
reduce contra las potencias h^m usando que la palabra líder de h^m es
lw(h)^m. Si algún elemento no se reduce a cero, el informe lo devuelve como
contraejemplo en lugar de ocultarlo.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from .solver import GradedBasis, centralizer_basis
from ..algebra.freepoly import FreePoly, commutator, deglex_key
from ..algebra.unipoly import UniPoly
from ..utils.errors import DomainViolationError

logger = logging.getLogger(__name__)

INSUFFICIENT_DEGREE = "insufficient degree"
REDUCTION_FAILURE = "reduction failure"
NOT_STABILIZED = "not stabilized"


@dataclass
class CentralizerReport:
    """Informe del centralizador: base, generador reconocido y certificados."""

    basis: GradedBasis
    h: Optional[FreePoly] = None
    certificates: List[Tuple[FreePoly, UniPoly]] = dc_field(default_factory=list)
    recognized: bool = False
    commutative: bool = True
    boundary_degree: Optional[int] = None
    counterexample: Optional[FreePoly] = None
    diagnostic: Optional[str] = None

    @property
    def f(self) -> FreePoly:
        return self.basis.f

    @property
    def bound(self) -> int:
        return self.basis.bound

    @property
    def claim(self) -> str:
        return f"C ∩ (deg ≤ {self.bound}) = k[h] ∩ (deg ≤ {self.bound})"

    def to_dict(self) -> dict:
        """Documento JSON del informe (esquema estable, cacheable)."""
        field = self.f.field
        data = {
            'f': self.f.to_text(),
            'field': field.descriptor,
            'D': self.bound,
            'basis': self.basis.to_json(),
            'dimensions': self.basis.dimensions(),
            'h': self.h.to_text() if self.h is not None else None,
            'certificates': [{'element': g.to_text(), 'q': q.to_list(field.to_json)}
                             for g, q in self.certificates],
            'recognized': self.recognized,
            'commutative': self.commutative,
            'boundary_degree': self.boundary_degree,
            'claim': self.claim,
        }
        if self.counterexample is not None:
            data['counterexample'] = self.counterexample.to_text()
        if self.diagnostic is not None:
            data['diagnostic'] = self.diagnostic
        return data


def _pairwise_commute(elements: List[FreePoly]) -> bool:
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            if commutator(a, b):
                return False
    return True


def express_in_powers(g: FreePoly, h: FreePoly,
                      powers: Dict[int, FreePoly]) -> Optional[UniPoly]:
    """Escribe g como q(h) por eliminación de palabras líderes.

    Args:
        g: Elemento a reducir
        h: Generador mónico de grado e >= 1
        powers: Caché m -> h^m (se amplía si hace falta)

    Returns:
        q con q(h) = g, o None si la reducción falla
    """
    field = g.field
    lead, e = h.leading_word, h.degree
    coeffs: Dict[int, object] = {}
    rest = g
    while rest:
        word = rest.leading_word
        if len(word) % e or word != lead * (len(word) // e):
            return None
        m = len(word) // e
        if m not in powers:
            powers[m] = h ** m
        c = rest.leading_coefficient / powers[m].leading_coefficient
        coeffs[m] = c
        rest = rest - powers[m].scale(c)
    if not coeffs:
        return UniPoly()
    return UniPoly([coeffs.get(i, field.zero) for i in range(max(coeffs) + 1)])


def normalize_generator(h: FreePoly) -> FreePoly:
    """Mónico y sin término independiente."""
    return (h - h.constant_term).monic()


def recognize_generator(basis: GradedBasis) -> CentralizerReport:
    """Reconoce un generador h con C ∩ (grado <= D) = k[h] ∩ (grado <= D).

    Args:
        basis: Base graduada del centralizador

    Returns:
        CentralizerReport; recognized = False con contraejemplo si la
        reducción falla, o con diagnóstico "insufficient degree" si la base
        solo contiene escalares
    """
    elements = basis.elements()
    report = CentralizerReport(basis, commutative=_pairwise_commute(elements))
    candidates = basis.nonscalar()
    if not candidates:
        report.diagnostic = INSUFFICIENT_DEGREE
        logger.info("sin elementos no escalares hasta grado %d", basis.bound)
        return report

    h = normalize_generator(min(candidates, key=lambda g: deglex_key(g.leading_word)))
    e = h.degree
    report.h = h
    report.boundary_degree = (basis.bound // e) * e
    one = FreePoly.one(h.field, h.alphabet_size)
    powers: Dict[int, FreePoly] = {0: one, 1: h}
    for g in elements:
        q = express_in_powers(g, h, powers)
        if q is None or q.evaluate(h, one) != g:
            logger.error("el elemento %s no es un polinomio en h = %s", g, h)
            report.counterexample = g
            report.diagnostic = REDUCTION_FAILURE
            report.certificates = []
            return report
        report.certificates.append((g, q))
    report.recognized = True
    logger.info("h = %s reconocido hasta grado %d", h, basis.bound)
    return report


def centralizer_report(f: FreePoly, bound: int) -> CentralizerReport:
    return recognize_generator(centralizer_basis(f, bound))


def stabilized_report(f: FreePoly, start: int, limit: int) -> CentralizerReport:
    """Aumenta D desde `start` hasta que h coincide en dos cotas consecutivas.

    Args:
        f: Elemento no escalar
        start: Primer grado máximo
        limit: Último grado máximo a probar

    Returns:
        El informe de la primera cota en la que h se estabiliza; si no ocurre
        antes de `limit`, el último informe con diagnóstico "not stabilized"
    """
    if start < 1 or limit < start:
        raise DomainViolationError(f"intervalo de grados inválido: {start}..{limit}")
    previous: Optional[CentralizerReport] = None
    report = None
    for bound in range(start, limit + 1):
        report = centralizer_report(f, bound)
        if (previous is not None and report.recognized and previous.recognized
                and report.h == previous.h):
            logger.info("h estabilizado en D = %d", bound)
            return report
        previous = report
    report.diagnostic = report.diagnostic or NOT_STABILIZED
    return report
