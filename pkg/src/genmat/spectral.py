"""Polinomios característico y mínimo, irreducibilidad sobre F_q y sondeo espectral.

El polinomio característico usa el algoritmo de Berkowitz, que no divide y
por tanto vale sobre cualquier anillo conmutativo: CommPoly para matrices
genéricas, escalares para matrices concretas.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from sympy import isprime, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_diff, gf_gcd, gf_irreducible_p, gf_pow_mod, gf_rem, gf_sub

from .identities import pi_test
from .matrices import ConcreteMatrix, GenericMatrix, pi_map, random_point, specialize, trial_rng
from ..algebra.commpoly import CommPoly
from ..algebra.field import Field
from ..algebra.freepoly import FreePoly
from ..algebra.linalg import EchelonBasis
from ..algebra.unipoly import UniPoly, to_gf_list
from ..utils.errors import DomainViolationError, PreconditionError
from ..utils.settings import Defaults

logger = logging.getLogger(__name__)

AnyMatrix = Union[GenericMatrix, ConcreteMatrix]


def _dot(row: Sequence, vector: Sequence, zero):
    acc = zero
    for a, b in zip(row, vector):
        if a and b:
            acc = acc + a * b
    return acc


def berkowitz(rows: Sequence[Sequence], zero, one) -> List:
    """Coeficientes de det(tI − A), de grado alto a bajo.

    Recorre las submatrices principales líderes; en el paso i la columna de
    Toeplitz es [1, −a, −R·C, −R·A·C, …, −R·A^(i−1)·C].
    """
    n = len(rows)
    poly = [one]
    for i in range(n):
        a = rows[i][i]
        r_row = rows[i][:i]
        column = [rows[r][i] for r in range(i)]
        sub = [row[:i] for row in rows[:i]]
        toeplitz = [one, -a]
        v = column
        for _ in range(i):
            toeplitz.append(-_dot(r_row, v, zero))
            v = [_dot(sub[r], v, zero) for r in range(i)]
        new = []
        for r in range(i + 2):
            acc = zero
            for c in range(min(r, i) + 1):
                acc = acc + toeplitz[r - c] * poly[c]
            new.append(acc)
        poly = new
    return poly


def charpoly(matrix: AnyMatrix) -> UniPoly:
    """Polinomio característico mónico de grado n (coeficientes de bajo a alto).

    Args:
        matrix: GenericMatrix (coeficientes CommPoly) o ConcreteMatrix (escalares)

    Returns:
        UniPoly con coeficiente de t^(n−1) igual a −traza y término
        independiente (−1)^n·det
    """
    if isinstance(matrix, GenericMatrix):
        zero, one = CommPoly.zero(matrix.field), CommPoly.one(matrix.field)
    else:
        zero, one = matrix.field.zero, matrix.field.one
    return UniPoly(list(reversed(berkowitz(matrix.rows, zero, one))))


def minpoly(matrix: ConcreteMatrix) -> UniPoly:
    """Polinomio mínimo: primera dependencia lineal entre I, M, M², …"""
    field = matrix.field
    basis = EchelonBasis(field)
    power = ConcreteMatrix.identity(field, matrix.order)
    for k in range(matrix.order + 1):
        vector = {(i, j): power.rows[i][j] for i in range(matrix.order)
                  for j in range(matrix.order) if power.rows[i][j]}
        combo = basis.insert(vector, k)
        if combo is not None:
            return UniPoly([combo.get(i, field.zero) for i in range(k + 1)])
        power = power * matrix
    raise AssertionError("Cayley–Hamilton garantiza una dependencia en grado <= n")


def _require_prime_field(field: Field):
    if not field.is_prime_field:
        raise DomainViolationError("la prueba requiere un cuerpo primo F_q")


def is_squarefree_fq(poly: UniPoly, field: Field) -> bool:
    """gcd(p, p') = 1: raíces distintas en la clausura algebraica."""
    _require_prime_field(field)
    f = to_gf_list(poly, field)
    return gf_gcd(f, gf_diff(f, field.modulus, ZZ), field.modulus, ZZ) == [1]


def irreducible_fq(poly: UniPoly, field: Field) -> bool:
    """Criterio de Rabin para un polinomio mónico sobre F_q.

    p de grado n es irreducible si y solo si t^(q^n) ≡ t (mod p) y
    gcd(p, t^(q^(n/r)) − t) = 1 para cada primo r que divide a n.

    Raises:
        DomainViolationError: Si el grado es < 1 o el cuerpo no es primo
    """
    _require_prime_field(field)
    if poly.is_constant():
        raise DomainViolationError("la irreducibilidad requiere grado >= 1")
    q = field.modulus
    f = to_gf_list(poly, field)
    if f[0] != 1:
        f = to_gf_list(poly.map(lambda c: c / poly.leading_coefficient), field)
    n = len(f) - 1
    t = [1, 0]
    # frobenius[k] = t^(q^k) mod p
    frobenius = [t]
    for _ in range(n):
        frobenius.append(gf_pow_mod(frobenius[-1], q, f, q, ZZ))
    if gf_rem(gf_sub(frobenius[n], t, q, ZZ), f, q, ZZ):
        return False
    for r in primefactors(n):
        if gf_gcd(f, gf_sub(frobenius[n // r], t, q, ZZ), q, ZZ) != [1]:
            return False
    return True


@dataclass
class SpectralReport:
    """Resultado del sondeo espectral sobre especializaciones aleatorias."""

    n: int
    q: int
    seed: int
    trials: int
    squarefree_count: int
    irreducible_count: int
    minpoly_is_charpoly_count: int
    irreducible_found: bool
    witness_trial: Optional[int] = None
    witness: Optional[ConcreteMatrix] = None
    witness_charpoly: Optional[UniPoly] = None

    @property
    def squarefree_fraction(self) -> float:
        return self.squarefree_count / self.trials

    def to_dict(self) -> dict:
        """Convierte el informe a diccionario para la salida JSON."""
        data = {
            'n': self.n,
            'q': self.q,
            'seed': self.seed,
            'trials': self.trials,
            'squarefree_count': self.squarefree_count,
            'squarefree_fraction': self.squarefree_fraction,
            'irreducible_count': self.irreducible_count,
            'minpoly_is_charpoly_count': self.minpoly_is_charpoly_count,
            'irreducible_found': self.irreducible_found,
        }
        if self.witness is not None:
            field = self.witness.field
            data['witness_trial'] = self.witness_trial
            data['witness'] = self.witness.to_json()
            data['witness_charpoly'] = [field.residue(c) for c in self.witness_charpoly.coeffs]
        return data


def spectral_probe(f: FreePoly, n: int, trials: int = Defaults.SPECTRAL_TRIALS,
                   seed: int = Defaults.DEFAULT_SEED, q: int = Defaults.SPECTRAL_PRIME) -> SpectralReport:
    """Especializa π(f) en puntos aleatorios y certifica propiedades espectrales.

    Un polinomio característico especializado libre de cuadrados certifica
    autovalores distintos; uno irreducible certifica la irreducibilidad del
    polinomio característico genérico (la reducibilidad se especializa).

    Args:
        f: Polinomio no escalar
        n: Orden primo
        trials: Número de especializaciones
        seed: Semilla base (la prueba i usa seed + i)
        q: Primo del cuerpo de especialización

    Returns:
        SpectralReport

    Raises:
        DomainViolationError: Si n o q no son primos
        PreconditionError: Si f − f(0) se anula en M_n(F_q)
    """
    if not isprime(n):
        raise DomainViolationError(f"el orden n = {n} no es primo")
    if not isprime(q):
        raise DomainViolationError(f"el módulo {q} no es primo")
    field = Field.prime(q)
    g = f.change_field(field)
    check = pi_test(g - g.constant_term, n, seed=seed, q=q)
    if check.is_identity:
        logger.warning("spectral_probe: f es escalar módulo las identidades de orden %d", n)
        raise PreconditionError("f debe ser no escalar en M_n", f.to_text())

    generic = pi_map(g, n)
    variables = generic.variables()
    squarefree = irreducible = coincide = 0
    report = SpectralReport(n, q, seed, trials, 0, 0, 0, False)
    for i in range(trials):
        matrix = specialize(generic, random_point(variables, field, trial_rng(seed, i)))
        cp = charpoly(matrix)
        if is_squarefree_fq(cp, field):
            squarefree += 1
        if minpoly(matrix) == cp:
            coincide += 1
        if irreducible_fq(cp, field):
            irreducible += 1
            if report.witness is None:
                report.witness_trial, report.witness, report.witness_charpoly = i, matrix, cp
    report.squarefree_count = squarefree
    report.irreducible_count = irreducible
    report.minpoly_is_charpoly_count = coincide
    report.irreducible_found = report.witness is not None
    logger.info("spectral_probe n=%d: %d/%d libres de cuadrados, %d irreducibles",
                n, squarefree, trials, irreducible)
    return report


def gf_irreducible_oracle(poly: UniPoly, field: Field) -> bool:
    """Veredicto independiente de sympy, usado para contrastar el criterio de Rabin."""
    _require_prime_field(field)
    return bool(gf_irreducible_p(to_gf_list(poly, field), field.modulus, ZZ))
