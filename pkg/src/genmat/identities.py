"""Identidades polinomiales de M_n(k): prueba aleatoria del núcleo de π.

La evaluación se hace por lotes con numpy: un arreglo (B, s, n, n) de
residuos int64 se recorre una sola vez por palabra, memorizando productos
de prefijos. Los productos se reducen módulo q antes de sumar, así que
con q < 2**31 basta int64; para módulos mayores (hasta 2**64) los residuos
se guardan como enteros de Python (dtype=object) y no hay desbordamiento.
"""

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional

import numpy as np
from sympy import isprime

from .matrices import ConcreteMatrix, trial_rng
from ..algebra.field import Field
from ..algebra.freepoly import EMPTY_WORD, FreePoly, Word
from ..utils.errors import DomainViolationError, PreconditionError
from ..utils.settings import Defaults

logger = logging.getLogger(__name__)

INT64_SAFE_MODULUS = 2**31
MAX_MODULUS = 2**64

IDENTITY = 'Identity'
NON_IDENTITY = 'NonIdentity'


def standard_polynomial(m: int, field: Field, s: Optional[int] = None) -> FreePoly:
    """Polinomio estándar S_m = Σ_σ sgn(σ) z_σ(0) … z_σ(m-1).

    Args:
        m: Número de variables que alterna (m >= 1)
        field: Cuerpo de coeficientes
        s: Tamaño del alfabeto (por defecto m; debe ser >= m)

    Returns:
        S_m con m! términos
    """
    s = m if s is None else s
    if m < 1 or s < m:
        raise DomainViolationError(f"S_{m} requiere 1 <= m <= s (s = {s})")
    terms: Dict[Word, object] = {}
    for perm in itertools.permutations(range(m)):
        inversions = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        terms[perm] = field(-1 if inversions % 2 else 1)
    return FreePoly(field, s, terms)


def residue_dtype(q: int):
    """int64 si los productos a*b < q**2 caben; si no, enteros de Python."""
    return np.int64 if q <= INT64_SAFE_MODULUS else object


def batch_matmul(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    """Producto modular de pilas de matrices (..., n, n)."""
    return ((a[..., :, :, None] * b[..., None, :, :]) % q).sum(axis=-2) % q


def batch_evaluate(f: FreePoly, stacks: np.ndarray, q: int) -> np.ndarray:
    """Evalúa f sobre un lote de s-tuplas de matrices.

    Args:
        f: Polinomio sobre F_q
        stacks: Arreglo (B, s, n, n) de residuos en [0, q)
        q: Módulo

    Returns:
        Arreglo (B, n, n) con f(tupla) para cada tupla del lote
    """
    batch, _, n, _ = stacks.shape
    dtype = stacks.dtype
    identity = np.broadcast_to(np.eye(n, dtype=np.int64).astype(dtype), (batch, n, n))
    cache: Dict[Word, np.ndarray] = {EMPTY_WORD: identity}

    def product(word: Word) -> np.ndarray:
        if word not in cache:
            cache[word] = batch_matmul(product(word[:-1]), stacks[:, word[-1]], q)
        return cache[word]

    result = np.zeros((batch, n, n), dtype=np.int64).astype(dtype)
    for word, coeff in f.terms():
        result = (result + product(word) * f.field.residue(coeff)) % q
    return result


def _as_prime_field(f: FreePoly, q: int) -> FreePoly:
    if q >= MAX_MODULUS:
        raise DomainViolationError(f"el módulo {q} excede 64 bits")
    if not isprime(q):
        raise DomainViolationError(f"el módulo {q} no es primo")
    return f.change_field(Field.prime(q))


@dataclass
class PiTestResult:
    """Veredicto de la prueba aleatoria de identidad.

    Identity lleva la cota de error (d/q)^samples, escrita de forma exacta;
    NonIdentity lleva la tupla testigo y el valor no nulo obtenido.
    """

    verdict: str
    n: int
    samples: int
    seed: int
    q: int
    degree: int
    confidence_bound: Optional[str] = None
    witness: Optional[List[ConcreteMatrix]] = None
    witness_value: Optional[ConcreteMatrix] = None
    witness_sample: Optional[int] = None

    @property
    def is_identity(self) -> bool:
        return self.verdict == IDENTITY

    def to_dict(self) -> dict:
        """Convierte el resultado a diccionario para la salida JSON."""
        data = {
            'verdict': self.verdict,
            'n': self.n,
            'samples': self.samples,
            'seed': self.seed,
            'q': self.q,
            'degree': self.degree,
            'confidence_bound': self.confidence_bound,
        }
        if self.witness is not None:
            data['witness'] = [m.to_json() for m in self.witness]
            data['witness_value'] = self.witness_value.to_json()
            data['witness_sample'] = self.witness_sample
        return data


def sample_stacks(s: int, n: int, q: int, seed: int, samples: int) -> np.ndarray:
    """s-tuplas aleatorias de matrices n×n; la muestra i usa la semilla seed + i."""
    draw = np.int64 if q < 2**63 else np.uint64
    stacks = np.stack([trial_rng(seed, i).integers(0, q, size=(s, n, n), dtype=draw)
                       for i in range(samples)])
    return stacks.astype(residue_dtype(q))


def pi_test(f: FreePoly, n: int, samples: int = Defaults.PI_TEST_SAMPLES,
            seed: int = Defaults.DEFAULT_SEED, q: int = Defaults.DEFAULT_PRIME) -> PiTestResult:
    """Decide probabilísticamente si f se anula idénticamente en M_n(F_q).

    Un valor no nulo es una prueba definitiva de que f ∉ ker π. Si todas las
    muestras se anulan, la probabilidad de error está acotada por
    (deg f / q)^samples (lema de Schwartz–Zippel).

    Args:
        f: Polinomio (se transporta a F_q)
        n: Orden de las matrices
        samples: Número de tuplas independientes (>= 1)
        seed: Semilla base
        q: Primo, q > deg f

    Returns:
        PiTestResult

    Raises:
        DomainViolationError: Si q no es primo, q >= 2**64 o samples < 1
        PreconditionError: Si q <= deg f
    """
    if samples < 1:
        raise DomainViolationError("se requiere al menos una muestra")
    g = _as_prime_field(f, q)
    degree = f.degree if f else 0
    if f and q <= degree:
        logger.warning("q = %d no supera el grado %d", q, degree)
        raise PreconditionError(f"se requiere q > deg f (q = {q}, deg f = {degree})", f.to_text())
    stacks = sample_stacks(f.alphabet_size, n, q, seed, samples)
    values = batch_evaluate(g, stacks, q)
    nonzero = np.flatnonzero((values.reshape(samples, -1) != 0).any(axis=1))
    base = dict(n=n, samples=samples, seed=seed, q=q, degree=degree)
    if nonzero.size:
        i = int(nonzero[0])
        logger.debug("pi_test: muestra %d no se anula", i)
        field = g.field
        return PiTestResult(NON_IDENTITY, witness=[ConcreteMatrix.from_array(field, m) for m in stacks[i]],
                            witness_value=ConcreteMatrix.from_array(field, values[i]),
                            witness_sample=i, **base)
    logger.debug("pi_test: %d muestras nulas", samples)
    return PiTestResult(IDENTITY, confidence_bound=f"({degree}/{q})^{samples}", **base)


@dataclass
class ExhaustiveCheck:
    """Resultado de la evaluación sobre todas las tuplas de M_n(F_q)^s."""

    identity: bool
    checked: int
    witness: Optional[List[ConcreteMatrix]] = dc_field(default=None)

    def to_dict(self) -> dict:
        data = {'identity': self.identity, 'checked': self.checked}
        if self.witness is not None:
            data['witness'] = [m.to_json() for m in self.witness]
        return data


def exhaustive_identity_check(f: FreePoly, n: int, q: int) -> ExhaustiveCheck:
    """Evalúa f en todas las s-tuplas de matrices n×n sobre F_q.

    Raises:
        PreconditionError: Si el número de tuplas supera Defaults.EXHAUSTIVE_LIMIT
    """
    g = _as_prime_field(f, q)
    s = f.alphabet_size
    entries = s * n * n
    total = q ** entries
    if total > Defaults.EXHAUSTIVE_LIMIT:
        raise PreconditionError(f"{total} tuplas exceden el límite de búsqueda exhaustiva")
    checked = 0
    chunk = Defaults.EXHAUSTIVE_CHUNK
    tuples = itertools.product(range(q), repeat=entries)
    while checked < total:
        block = np.array(list(itertools.islice(tuples, chunk)), dtype=np.int64)
        stacks = block.reshape(-1, s, n, n)
        values = batch_evaluate(g, stacks, q)
        bad = np.flatnonzero((values.reshape(len(stacks), -1) != 0).any(axis=1))
        if bad.size:
            witness = [ConcreteMatrix.from_array(g.field, m) for m in stacks[int(bad[0])]]
            return ExhaustiveCheck(False, checked + int(bad[0]) + 1, witness)
        checked += len(stacks)
    logger.info("búsqueda exhaustiva: %d tuplas, todas nulas", checked)
    return ExhaustiveCheck(True, checked)
