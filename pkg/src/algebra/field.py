"""Cuerpos base exactos: racionales y cuerpos primos.

Los escalares son elementos de los dominios de sympy (QQ o GF(p)), de modo
que la aritmética es exacta y nunca interviene la coma flotante.
"""

import logging
from fractions import Fraction
from typing import Any, Optional, Union

from sympy import integer_nthroot, isprime
from sympy.ntheory import nthroot_mod
from sympy.polys.domains import GF, QQ

from ..utils.errors import DomainViolationError

logger = logging.getLogger(__name__)

Scalar = Any  # elemento de QQ o de GF(p)


class Field:
    """Descriptor de cuerpo: ℚ o F_p con p primo.

    Dos descriptores son iguales si describen el mismo cuerpo, lo que permite
    comprobar la compatibilidad de operandos con una simple comparación.
    """

    RATIONAL = 'rational'
    PRIME = 'prime'

    def __init__(self, modulus: Optional[int] = None):
        """Inicializa el cuerpo.

        Args:
            modulus: Primo p para F_p; None para ℚ

        Raises:
            DomainViolationError: Si el módulo no es primo
        """
        if modulus is None:
            self.kind = self.RATIONAL
            self.modulus = None
            self.domain = QQ
        else:
            modulus = int(modulus)
            if modulus < 2 or not isprime(modulus):
                raise DomainViolationError(f"el módulo {modulus} no es primo")
            self.kind = self.PRIME
            self.modulus = modulus
            self.domain = GF(modulus, symmetric=False)
        self.zero = self.domain.zero
        self.one = self.domain.one

    @classmethod
    def rational(cls) -> 'Field':
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> 'Field':
        return cls(p)

    @classmethod
    def parse(cls, descriptor: str) -> 'Field':
        """Construye un cuerpo desde su descriptor textual.

        Args:
            descriptor: 'q' para ℚ o 'p:<primo>'

        Returns:
            El cuerpo correspondiente
        """
        text = descriptor.strip().lower()
        if text in ('q', 'qq'):
            return cls.rational()
        if text.startswith('p:'):
            try:
                return cls.prime(int(text[2:]))
            except ValueError:
                raise DomainViolationError(f"descriptor de cuerpo inválido: {descriptor!r}")
        raise DomainViolationError(f"descriptor de cuerpo inválido: {descriptor!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == self.PRIME

    @property
    def characteristic(self) -> int:
        return self.modulus if self.is_prime_field else 0

    @property
    def descriptor(self) -> str:
        return f"p:{self.modulus}" if self.is_prime_field else 'q'

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return self.kind == other.kind and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return f"Field({self.descriptor})"

    def __call__(self, value: Union[int, Fraction, Scalar]) -> Scalar:
        """Convierte un entero, fracción o escalar al cuerpo."""
        if isinstance(value, Fraction):
            return self.from_fraction(value.numerator, value.denominator)
        if isinstance(value, int):
            return self.domain(value)
        return self.domain.convert(value)

    def from_fraction(self, numerator: int, denominator: int = 1) -> Scalar:
        """Convierte numerador/denominador en un escalar.

        Raises:
            DomainViolationError: Si el denominador se anula en el cuerpo
        """
        if denominator == 0 or (self.is_prime_field and denominator % self.modulus == 0):
            raise DomainViolationError(
                f"el literal {numerator}/{denominator} no es representable en {self.descriptor}")
        if self.is_prime_field:
            return self.domain(numerator) / self.domain(denominator)
        return self.domain(numerator, denominator)

    def residue(self, value: Scalar) -> int:
        """Residuo en [0, p) de un escalar de cuerpo primo."""
        return int(self.domain.to_int(value)) % self.modulus

    def signed_residue(self, value: Scalar) -> int:
        """Representante simétrico en (-p/2, p/2]."""
        r = self.residue(value)
        return r - self.modulus if r > self.modulus // 2 else r

    def as_fraction(self, value: Scalar) -> Fraction:
        """Representación racional canónica (residuo con signo en F_p)."""
        if self.is_prime_field:
            return Fraction(self.signed_residue(value))
        return Fraction(int(self.domain.numer(value)), int(self.domain.denom(value)))

    def convert_from(self, value: Scalar, source: 'Field') -> Scalar:
        """Transporta un escalar de otro cuerpo a este."""
        if source == self:
            return value
        frac = source.as_fraction(value)
        return self.from_fraction(frac.numerator, frac.denominator)

    def to_text(self, value: Scalar) -> str:
        frac = self.as_fraction(value)
        if frac.denominator == 1:
            return str(frac.numerator)
        return f"{frac.numerator}/{frac.denominator}"

    def to_json(self, value: Scalar):
        """Entero si es posible; cadena 'n/d' en otro caso."""
        frac = self.as_fraction(value)
        return frac.numerator if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"

    def kth_root(self, value: Scalar, k: int) -> Optional[Scalar]:
        """Raíz k-ésima canónica en el cuerpo, si existe.

        Sobre ℚ se conserva el signo real (None si no es racional); sobre
        F_p se toma el menor residuo no negativo.

        Args:
            value: Escalar
            k: Índice de la raíz (k >= 1)

        Returns:
            La raíz o None si no existe en el cuerpo
        """
        if not value:
            return self.zero
        if self.is_prime_field:
            roots = nthroot_mod(self.residue(value), k, self.modulus, all_roots=True)
            if not roots:
                return None
            return self.domain(min(int(r) for r in roots))
        frac = self.as_fraction(value)
        sign = 1
        if frac < 0:
            if k % 2 == 0:
                return None
            sign = -1
        num, exact_num = integer_nthroot(abs(frac.numerator), k)
        den, exact_den = integer_nthroot(frac.denominator, k)
        if not (exact_num and exact_den):
            return None
        return self.from_fraction(sign * int(num), int(den))

    def random_element(self, rng, bound: int = 1000) -> Scalar:
        """Elemento aleatorio: uniforme en F_p, entero acotado en ℚ."""
        if self.is_prime_field:
            return self.domain(int(rng.integers(0, self.modulus)))
        return self.domain(int(rng.integers(-bound, bound + 1)))

    def random_nonzero(self, rng, bound: int = 1000) -> Scalar:
        while True:
            value = self.random_element(rng, bound)
            if value:
                return value


def default_field() -> Field:
    from ..utils.settings import Defaults
    return Field.prime(Defaults.DEFAULT_PRIME)
