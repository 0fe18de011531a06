"""Raíces k-ésimas no conmutativas y sondeo de la clausura integral.

Si g^k = h, la parte superior g_m de g determina la parte superior de h;
cada parte homogénea inferior de g aparece linealmente en la porción
correspondiente de h, de modo que se obtiene resolviendo un sistema
lineal exacto. Si la característica divide a k ese sistema deja de ser
inyectivo y se recorre su núcleo. La raíz devuelta tiene como coeficiente
líder la raíz k-ésima canónica del cuerpo.
"""

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterator, List, Optional, Sequence

from .recognition import centralizer_report
from .solver import is_in_centralizer
from ..algebra.freepoly import FreePoly, Word, all_words, deglex_key, homogeneous_part
from ..algebra.linalg import EchelonBasis
from ..algebra.unipoly import UniPoly
from ..genmat.matrices import trial_rng
from ..utils.errors import DomainViolationError, PreconditionError
from ..utils.settings import Defaults
from ..words.periodic import primitive_root

logger = logging.getLogger(__name__)


def _top_root(top: FreePoly, k: int) -> Optional[FreePoly]:
    # parte homogénea superior: g_m[w] = top[u^(k-1) w] / c^(k-1)
    field = top.field
    root, exponent = primitive_root(top.leading_word)
    if exponent % k:
        return None
    u = root * (exponent // k)
    c = field.kth_root(top.leading_coefficient, k)
    if c is None:
        return None
    prefix = u * (k - 1)
    scale = field.one / c ** (k - 1)
    terms = {word[len(prefix):]: coeff * scale for word, coeff in top.terms()
             if word[:len(prefix)] == prefix}
    candidate = FreePoly(field, top.alphabet_size, terms)
    if candidate ** k != top:
        return None
    return candidate


def _linear_image(word: Word, gm_powers: Sequence[FreePoly], k: int) -> Dict[Word, object]:
    # L(w) = Σ_i g_m^i · w · g_m^(k-1-i)
    base = gm_powers[0]
    w = FreePoly.monomial(base.field, base.alphabet_size, word)
    total = base - base
    for i in range(k):
        total = total + gm_powers[i] * w * gm_powers[k - 1 - i]
    return total.as_dict()


def _slice_system(field, s: int, degree: int, gm_powers: Sequence[FreePoly], k: int):
    # sistema L sobre las palabras de longitud `degree` y base de ker L
    system = EchelonBasis(field, key=deglex_key)
    kernel = []
    for word in all_words(s, degree):
        combo = system.insert(_linear_image(word, gm_powers, k), word)
        if combo is not None:
            kernel.append(FreePoly(field, s, combo))
    return system, kernel


def _kernel_span(field, s: int, kernel: Sequence[FreePoly]) -> Iterator[FreePoly]:
    # todos los elementos de ker L sobre F_p; el cero primero
    if not kernel:
        yield FreePoly.zero(field, s)
        return
    for coeffs in itertools.product(range(field.modulus), repeat=len(kernel)):
        total = FreePoly.zero(field, s)
        for c, v in zip(coeffs, kernel):
            if c:
                total = total + v.scale(c)
        yield total


def _lift(h: FreePoly, g: FreePoly, r: int, m: int, k: int, stages) -> Optional[FreePoly]:
    if r > m:
        return g if g ** k == h else None
    system, kernel = stages[r - 1]
    degree = k * m - r
    target = homogeneous_part(h, degree) - homogeneous_part(g ** k, degree)
    solution = system.express(target.as_dict())
    if solution is None:
        logger.debug("nc_root: porción de grado %d sin solución", degree)
        return None
    g = g + FreePoly(h.field, h.alphabet_size, solution)
    for shift in _kernel_span(h.field, h.alphabet_size, kernel):
        found = _lift(h, g + shift, r + 1, m, k, stages)
        if found is not None:
            return found
    return None


def nc_root(h: FreePoly, k: int) -> Optional[FreePoly]:
    """Raíz k-ésima de h en F_s, si existe.

    Cuando la característica divide a k, la aplicación lineal de cada
    porción tiene núcleo (contiene al menos los escalares) y la raíz ya no
    queda determinada porción a porción: se recorren todas las elecciones
    del núcleo con vuelta atrás, hasta Defaults.ROOT_SEARCH_LIMIT
    combinaciones.

    Args:
        h: Polinomio (su grado debe ser múltiplo de k)
        k: Índice (k >= 2)

    Returns:
        g con g^k = h, o None si no existe en F_s

    Raises:
        DomainViolationError: Si k < 2
        PreconditionError: Si la búsqueda en el núcleo excede
            Defaults.ROOT_SEARCH_LIMIT combinaciones
    """
    if k < 2:
        raise DomainViolationError(f"el índice de la raíz debe ser >= 2 (k = {k})")
    field, s = h.field, h.alphabet_size
    if not h:
        return h
    if h.degree % k:
        return None
    if h.is_scalar():
        c = field.kth_root(h.constant_term, k)
        return None if c is None else FreePoly.constant(field, s, c)

    m = h.degree // k
    gm = _top_root(homogeneous_part(h, h.degree), k)
    if gm is None:
        return None
    one = FreePoly.one(field, s)
    gm_powers = [one]
    for _ in range(k - 1):
        gm_powers.append(gm_powers[-1] * gm)

    stages = [_slice_system(field, s, m - r, gm_powers, k) for r in range(1, m + 1)]
    free = sum(len(kernel) for _, kernel in stages)
    if free:
        combinations = field.modulus ** free
        if combinations > Defaults.ROOT_SEARCH_LIMIT:
            raise PreconditionError(
                f"la raíz de índice {k} en característica {field.characteristic} "
                f"requiere {combinations} combinaciones del núcleo", h.to_text())
        logger.debug("nc_root: núcleo de dimensión %d, %d combinaciones", free, combinations)
    return _lift(h, gm, 1, m, k, stages)


@dataclass
class ClosureTrial:
    """Una prueba del sondeo: g = q(h), g^k ∈ C y su raíz."""

    candidate: FreePoly
    k: int
    member: bool
    root: Optional[FreePoly] = None
    root_commutes: bool = False
    q: Optional[UniPoly] = None

    @property
    def passed(self) -> bool:
        return self.member and self.root is not None and self.root_commutes

    def to_dict(self, field) -> dict:
        data = {
            'candidate': self.candidate.to_text(),
            'k': self.k,
            'member': self.member,
            'root': self.root.to_text() if self.root is not None else None,
            'root_commutes': self.root_commutes,
        }
        if self.q is not None:
            data['q'] = self.q.to_list(field.to_json)
        return data


@dataclass
class ClosureReport:
    """Resultado de integral_closure_probe."""

    f: FreePoly
    bound: int
    seed: int
    h: FreePoly
    trials: List[ClosureTrial] = dc_field(default_factory=list)
    candidates: List[ClosureTrial] = dc_field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for t in self.trials if t.passed)

    @property
    def failed(self) -> int:
        return len(self.trials) - self.passed

    @property
    def non_members(self) -> int:
        return sum(1 for t in self.candidates if not t.member)

    def to_dict(self) -> dict:
        field = self.f.field
        return {
            'f': self.f.to_text(),
            'field': field.descriptor,
            'D': self.bound,
            'seed': self.seed,
            'h': self.h.to_text(),
            'trials': len(self.trials),
            'passed': self.passed,
            'failed': self.failed,
            'failures': [t.to_dict(field) for t in self.trials if not t.passed],
            'candidates': [t.to_dict(field) for t in self.candidates],
            'non_members': self.non_members,
        }


def check_candidate(g: FreePoly, k: int, f: FreePoly, q: Optional[UniPoly] = None) -> ClosureTrial:
    """Comprueba g^k ∈ C(f) y, en tal caso, que la raíz de g^k conmute con f."""
    power = g ** k
    trial = ClosureTrial(g, k, is_in_centralizer(power, f), q=q)
    if not trial.member:
        return trial
    trial.root = nc_root(power, k)
    trial.root_commutes = trial.root is not None and is_in_centralizer(trial.root, f)
    return trial


def _random_univariate(field, degree: int, rng) -> UniPoly:
    coeffs = [field.random_element(rng, bound=5) for _ in range(degree)]
    return UniPoly(coeffs + [field.random_nonzero(rng, bound=5)])


def integral_closure_probe(f: FreePoly, bound: int, trials: int = Defaults.CLOSURE_TRIALS,
                           seed: int = Defaults.DEFAULT_SEED,
                           extra_candidates: Sequence[FreePoly] = (),
                           extra_k: int = 2) -> ClosureReport:
    """Si g^k ∈ C(f) entonces g ∈ C(f): consecuencia comprobable de la clausura integral.

    Cada prueba elige k y un polinomio univariado q con deg q(h)^k <= D,
    comprueba que q(h)^k conmuta con f, calcula su raíz k-ésima y verifica
    que la raíz también conmuta. Los candidatos extra recorren además la
    rama de no pertenencia (g^k ∉ C).

    Args:
        f: Elemento no escalar
        bound: Grado máximo D usado para reconocer h
        trials: Número de pruebas aleatorias
        seed: Semilla base (la prueba i usa seed + i)
        extra_candidates: Elementos g adicionales a comprobar con extra_k
        extra_k: Exponente para los candidatos extra

    Returns:
        ClosureReport

    Raises:
        PreconditionError: Si no se reconoce h o D < 2·deg h
    """
    report = centralizer_report(f, bound)
    if not report.recognized:
        raise PreconditionError("no se reconoció un generador del centralizador", report.diagnostic)
    h, e = report.h, report.h.degree
    max_k = bound // e
    if max_k < 2:
        raise PreconditionError(f"D = {bound} no admite potencias k >= 2 de h (deg h = {e})")
    field = f.field
    one = FreePoly.one(field, f.alphabet_size)
    probe = ClosureReport(f, bound, seed, h)
    for i in range(trials):
        rng = trial_rng(seed, i)
        k = int(rng.integers(2, max_k + 1))
        q = _random_univariate(field, int(rng.integers(1, bound // (e * k) + 1)), rng)
        probe.trials.append(check_candidate(q.evaluate(h, one), k, f, q))
    for g in extra_candidates:
        probe.candidates.append(check_candidate(g, extra_k, f))
    logger.info("clausura integral de %s: %d/%d pruebas correctas", f, probe.passed, trials)
    return probe
