"""Batería de aceptación y oráculos independientes.

Cada criterio se ejecuta con semillas fijas y devuelve un CriterionResult.
Los oráculos (desarrollo por cofactores, núcleo denso, comparación por
prefijo largo, búsqueda exhaustiva) no comparten código con las rutas que
contrastan.
"""

import logging
import time
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence

import numpy as np
from sympy.polys.matrices import DomainMatrix

from ..algebra.field import Field
from ..algebra.freepoly import FreePoly, Word, all_words, commutator, substitute
from ..algebra.unipoly import UniPoly
from ..centralizer.recognition import centralizer_report
from ..centralizer.roots import integral_closure_probe, nc_root
from ..centralizer.solver import centralizer_basis
from ..genmat.identities import exhaustive_identity_check, pi_test, standard_polynomial
from ..genmat.matrices import ConcreteMatrix
from ..genmat.spectral import charpoly, spectral_probe
from ..genmat.traces import (conjugate, random_invertible, trace_axioms_hold, ut_eval,
                             ut_symbolic, word_trace)
from ..utils.settings import Defaults
from ..words.bergman import bergman_projection
from ..words.periodic import brute_force_inf_cmp, inf_cmp

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Generadores aleatorios
# ----------------------------------------------------------------------
def random_word(rng, s: int, min_length: int, max_length: int) -> Word:
    length = int(rng.integers(min_length, max_length + 1))
    return tuple(int(a) for a in rng.integers(0, s, size=length))


def random_poly(field: Field, s: int, rng, max_degree: int, max_terms: int,
                constant_free: bool = False) -> FreePoly:
    """Polinomio aleatorio no nulo con coeficientes pequeños."""
    while True:
        terms: Dict[Word, object] = {}
        for _ in range(int(rng.integers(1, max_terms + 1))):
            word = random_word(rng, s, 1 if constant_free else 0, max_degree)
            terms[word] = terms.get(word, field.zero) + field.random_nonzero(rng, bound=5)
        poly = FreePoly(field, s, terms)
        if poly:
            return poly


# ----------------------------------------------------------------------
# Oráculos
# ----------------------------------------------------------------------
def cofactor_charpoly(matrix: ConcreteMatrix) -> UniPoly:
    """det(tI − M) por desarrollo de Laplace en la primera fila."""
    field, n = matrix.field, matrix.order
    entries = [[UniPoly([-matrix.rows[i][j], field.one]) if i == j else UniPoly([-matrix.rows[i][j]])
                for j in range(n)] for i in range(n)]

    def det(rows: List[List[UniPoly]]) -> UniPoly:
        if not rows:
            return UniPoly([field.one])
        total = UniPoly()
        for j, entry in enumerate(rows[0]):
            if not entry:
                continue
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            term = entry * det(minor)
            total = total - term if j % 2 else total + term
        return total

    return det(entries)


def dense_centralizer_dimensions(f: FreePoly, bound: int) -> List[int]:
    """dim C(f) ∩ (grado <= d) para d = 0..D, vía el rango de la matriz densa de [f, ·]."""
    field, s = f.field, f.alphabet_size
    dims = []
    for d in range(bound + 1):
        columns = [w for length in range(d + 1) for w in all_words(s, length)]
        row_index: Dict[Word, int] = {}
        data: Dict[int, Dict[int, object]] = {}
        for j, word in enumerate(columns):
            for image_word, coeff in commutator(f, FreePoly.monomial(field, s, word)).terms():
                i = row_index.setdefault(image_word, len(row_index))
                data.setdefault(i, {})[j] = coeff
        rank = 0
        if data:
            rank = DomainMatrix(data, (len(row_index), len(columns)), field.domain).rank()
        dims.append(len(columns) - rank)
    return dims


def word_lemma_holds(u: Word, v: Word) -> bool:
    """u^∞ ⋈ (uv)^∞ ⋈ (vu)^∞ ⋈ v^∞ con ⋈ igual a la comparación de u^∞ y v^∞."""
    expected = inf_cmp(u, v)
    chain = [u, u + v, v + u, v]
    return all(inf_cmp(a, b) is expected for a, b in zip(chain, chain[1:]))


# ----------------------------------------------------------------------
# Criterios
# ----------------------------------------------------------------------
@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: dict = dc_field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            'number': self.number,
            'title': self.title,
            'passed': self.passed,
            'seconds': round(self.seconds, 3),
            'details': self.details,
        }


def _gens(field: Field, s: int = 2):
    return [FreePoly.generator(field, s, i) for i in range(s)]


def criterion_centralizer(quick: bool, seed: int) -> dict:
    field = Field.prime(Defaults.DEFAULT_PRIME)
    x, y = _gens(field)
    bound = 6 if quick else 8
    details = {}
    ok = True
    for f, expected in ((x ** 2, x), (x + y, x + y), (x * y * x, x * y * x), (x * y, x * y)):
        report = centralizer_report(f, bound)
        oracle = dense_centralizer_dimensions(f, bound)
        good = report.recognized and report.h == expected and report.basis.dimensions() == oracle
        details[f.to_text()] = {'h': report.h.to_text() if report.h is not None else None,
                                'dimensions': report.basis.dimensions(), 'oracle': oracle,
                                'passed': good}
        ok = ok and good
    return {'passed': ok, 'details': details}


def criterion_word_lemma(quick: bool, seed: int) -> dict:
    pairs = 10 ** 4 if quick else 10 ** 5
    rng = np.random.default_rng(seed)
    lengths = rng.integers(1, 9, size=(pairs, 2))
    alphabets = rng.integers(1, 4, size=pairs)
    letters = rng.integers(0, 1 << 30, size=(pairs, 2, 8))
    violations = disagreements = 0
    for i in range(pairs):
        a = int(alphabets[i])
        u = tuple(int(c) % a for c in letters[i, 0, :lengths[i, 0]])
        v = tuple(int(c) % a for c in letters[i, 1, :lengths[i, 1]])
        if not word_lemma_holds(u, v):
            violations += 1
        if inf_cmp(u, v) is not brute_force_inf_cmp(u, v):
            disagreements += 1
    return {'passed': violations == 0 and disagreements == 0,
            'details': {'pairs': pairs, 'violations': violations, 'oracle_disagreements': disagreements}}


def criterion_kernel(quick: bool, seed: int) -> dict:
    field = Field.prime(Defaults.DEFAULT_PRIME)
    s4 = standard_polynomial(4, field)
    x, y = _gens(field)
    identity = pi_test(s4, 2, 50, seed, Defaults.DEFAULT_PRIME)
    exhaustive = exhaustive_identity_check(s4, 2, 2)
    commutator_test = pi_test(commutator(x, y), 2, 50, seed, Defaults.DEFAULT_PRIME)
    ok = identity.is_identity and exhaustive.identity and not commutator_test.is_identity
    return {'passed': ok, 'details': {'S4': identity.to_dict(), 'exhaustive_F2': exhaustive.to_dict(),
                                      '[x,y]': commutator_test.to_dict()}}


def criterion_charpoly(quick: bool, seed: int) -> dict:
    rng = np.random.default_rng(seed)
    count = 20 if quick else 100
    mismatches = 0
    for field in (Field.prime(7), Field.rational()):
        for i in range(count):
            n = 1 + i % 5
            m = ConcreteMatrix.random(field, n, rng)
            cp = charpoly(m)
            det = m.determinant()
            sign = field.one if n % 2 == 0 else -field.one
            if (cp != cofactor_charpoly(m) or cp[n - 1] != -m.trace()
                    or cp[0] != sign * det or cp.leading_coefficient != field.one):
                mismatches += 1
    return {'passed': mismatches == 0, 'details': {'matrices': 2 * count, 'mismatches': mismatches}}


def criterion_spectral(quick: bool, seed: int) -> dict:
    field = Field.prime(Defaults.SPECTRAL_PRIME)
    x = FreePoly.generator(field, 1, 0)
    details = {}
    ok = True
    for n in (2, 3, 5):
        report = spectral_probe(x, n, Defaults.SPECTRAL_TRIALS, seed, Defaults.SPECTRAL_PRIME)
        good = report.irreducible_found and report.squarefree_fraction >= 0.9
        details[str(n)] = {'irreducible_found': report.irreducible_found,
                           'squarefree_fraction': report.squarefree_fraction, 'passed': good}
        ok = ok and good
    return {'passed': ok, 'details': details}


def criterion_traces(quick: bool, seed: int) -> dict:
    field = Field.prime(Defaults.SPECTRAL_PRIME)
    rng = np.random.default_rng(seed)
    trials = 200 if quick else 1000
    failures = 0
    for _ in range(trials):
        mats = [ConcreteMatrix.random(field, 3, rng) for _ in range(2)]
        u, v = random_word(rng, 2, 0, 4), random_word(rng, 2, 0, 4)
        b = random_invertible(field, 3, rng)
        cyclic = word_trace(u + v, mats) == word_trace(v + u, mats)
        invariant = word_trace(u + v, conjugate(mats, b)) == word_trace(u + v, mats)
        if not (cyclic and invariant and trace_axioms_hold(mats[0], mats[1])):
            failures += 1
    return {'passed': failures == 0, 'details': {'trials': trials, 'failures': failures}}


def criterion_closure(quick: bool, seed: int) -> dict:
    field = Field.prime(Defaults.DEFAULT_PRIME)
    x, y = _gens(field)
    trials = 20 if quick else 100
    details = {}
    ok = True
    for f, bound in ((x ** 2, 8), (x * y * x, 9)):
        probe = integral_closure_probe(f, bound, trials, seed)
        details[f.to_text()] = {'passed': probe.passed, 'failed': probe.failed}
        ok = ok and probe.failed == 0
    rng = np.random.default_rng(seed)
    roundtrips = 100 if quick else 1000
    bad = 0
    for _ in range(roundtrips):
        g = random_poly(field, 2, rng, 3, 4)
        k = int(rng.integers(2, 4))
        power = g ** k
        root = nc_root(power, k)
        if root is None or root ** k != power:
            bad += 1
    details['roundtrip'] = {'trials': roundtrips, 'failures': bad}
    return {'passed': ok and bad == 0, 'details': details}


def criterion_upper_triangular(quick: bool, seed: int) -> dict:
    q = Defaults.DEFAULT_PRIME
    field = Field.prime(q)
    rng = np.random.default_rng(seed)
    n = 6
    trace_failures = nilpotent_failures = 0
    for i in range(20):
        f = random_poly(field, 2, rng, 7, 5, constant_free=True)
        image = ut_eval(f, n, seed + i, q)
        if image.trace() or not image.is_strictly_upper():
            trace_failures += 1
        length = n + i % 3
        high = FreePoly(field, 2, {random_word(rng, 2, length, length): field.random_nonzero(rng)
                                   for _ in range(3)})
        if not ut_eval(high, n, seed + i, q).is_zero():
            nilpotent_failures += 1
    low = random_poly(field, 2, rng, n - 1, 6, constant_free=True)
    injective = any(not ut_eval(low, n, s, q).is_zero() for s in range(20))
    symbolic = not ut_symbolic(low, n).is_zero()
    ok = trace_failures == 0 and nilpotent_failures == 0 and injective and symbolic
    return {'passed': ok, 'details': {'trace_failures': trace_failures,
                                      'nilpotent_failures': nilpotent_failures,
                                      'low_degree': low.to_text(), 'nonzero_image': injective,
                                      'symbolic_nonzero': symbolic}}


def criterion_bergman(quick: bool, seed: int) -> dict:
    field = Field.prime(Defaults.DEFAULT_PRIME)
    x, y = _gens(field)
    sets = {'{x^2}': [x ** 2], '{x+y}': [x + y],
            'C(x^2) deg<=4': centralizer_basis(x ** 2, 4).elements()}
    details = {}
    ok = True
    for name, generators in sets.items():
        projection = bergman_projection(generators)
        details[name] = projection.to_dict(field)
        ok = ok and projection.is_nontrivial()
    return {'passed': ok, 'details': details}


def criterion_t_ideal(quick: bool, seed: int) -> dict:
    field = Field.prime(Defaults.DEFAULT_PRIME)
    s4 = standard_polynomial(4, field)
    rng = np.random.default_rng(seed)
    failures = 0
    for i in range(20):
        images = [random_poly(field, 2, rng, 2, 3) for _ in range(4)]
        if not pi_test(substitute(s4, images), 2, 50, seed + i, Defaults.DEFAULT_PRIME).is_identity:
            failures += 1
    return {'passed': failures == 0, 'details': {'endomorphisms': 20, 'failures': failures}}


CRITERIA: Dict[int, tuple] = {
    1: ("Centralizer recovery", criterion_centralizer),
    2: ("Periodic word lemma", criterion_word_lemma),
    3: ("Kernel of pi", criterion_kernel),
    4: ("Division-free characteristic polynomial", criterion_charpoly),
    5: ("Prime-order spectral claims", criterion_spectral),
    6: ("Trace invariance", criterion_traces),
    7: ("Integral closure", criterion_closure),
    8: ("Upper-triangular reduction", criterion_upper_triangular),
    9: ("Bergman projection", criterion_bergman),
    10: ("T-ideal stability", criterion_t_ideal),
}


def run_acceptance(quick: bool = False, seed: int = Defaults.DEFAULT_SEED,
                   only: Optional[Sequence[int]] = None) -> List[CriterionResult]:
    """Ejecuta los criterios (todos, o los indicados en `only`).

    Args:
        quick: Reduce el número de pruebas aleatorias
        seed: Semilla base
        only: Números de criterio a ejecutar

    Returns:
        Lista de CriterionResult en orden de número
    """
    results = []
    for number in sorted(only or CRITERIA):
        title, check = CRITERIA[number]
        start = time.perf_counter()
        outcome = check(quick, seed)
        elapsed = time.perf_counter() - start
        result = CriterionResult(number, title, outcome['passed'], outcome['details'], elapsed)
        level = logging.INFO if result.passed else logging.ERROR
        logger.log(level, "criterio %d (%s): %s en %.2f s", number, title,
                   "correcto" if result.passed else "FALLO", elapsed)
        results.append(result)
    return results
