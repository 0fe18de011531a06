"""Álgebra asociativa libre k⟨z_0, …, z_{s-1}⟩.

Este módulo contiene las palabras (monomios del monoide libre), el orden
deglex y la clase FreePoly con la aritmética no conmutativa exacta.
"""

import functools
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from .field import Field, Scalar
from ..utils.errors import DomainViolationError, StructureMismatchError

Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


@functools.total_ordering
class _MinusInfinity:
    """Grado del polinomio cero: menor que todo entero y absorbente en sumas."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash('-inf')

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        return self

    __rmul__ = __mul__

    def __repr__(self):
        return '-inf'


MINUS_INFINITY = _MinusInfinity()


def deglex_key(word: Word) -> Tuple[int, Word]:
    """Clave de ordenación deglex con z_0 < z_1 < …"""
    return (len(word), word)


def word_text(word: Word) -> str:
    """Ortografía canónica: 'z0 z1 z0'; la palabra vacía es '1'."""
    if not word:
        return '1'
    return ' '.join(f"z{i}" for i in word)


def all_words(s: int, length: int) -> Iterator[Word]:
    """Todas las palabras de longitud dada, en orden lexicográfico."""
    if length == 0:
        yield EMPTY_WORD
        return
    for prefix in all_words(s, length - 1):
        for i in range(s):
            yield prefix + (i,)


class FreePoly:
    """Elemento de F_s: combinación lineal finita de palabras.

    Los valores son inmutables; el soporte se guarda ordenado en deglex
    descendente y nunca contiene coeficientes nulos.
    """

    __slots__ = ('_terms', 'field', 'alphabet_size', '_hash')

    def __init__(self, field: Field, alphabet_size: int, terms: Mapping[Word, Scalar] = None):
        """Inicializa el polinomio.

        Args:
            field: Cuerpo de coeficientes
            alphabet_size: Número s de generadores
            terms: Diccionario palabra -> coeficiente (se descartan ceros)
        """
        if alphabet_size < 1:
            raise DomainViolationError("el alfabeto debe tener al menos un generador")
        self.field = field
        self.alphabet_size = alphabet_size
        clean = {}
        if terms:
            for word, coeff in terms.items():
                if coeff:
                    if any(i < 0 or i >= alphabet_size for i in word):
                        raise StructureMismatchError(
                            f"la palabra {word_text(word)} no pertenece al alfabeto de tamaño {alphabet_size}")
                    clean[tuple(word)] = coeff
        ordered = sorted(clean, key=deglex_key, reverse=True)
        self._terms = {w: clean[w] for w in ordered}
        self._hash = None

    # ------------------------------------------------------------------
    # Constructores
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, field: Field, s: int) -> 'FreePoly':
        return cls(field, s)

    @classmethod
    def constant(cls, field: Field, s: int, value) -> 'FreePoly':
        return cls(field, s, {EMPTY_WORD: field(value)})

    @classmethod
    def one(cls, field: Field, s: int) -> 'FreePoly':
        return cls.constant(field, s, 1)

    @classmethod
    def generator(cls, field: Field, s: int, index: int) -> 'FreePoly':
        return cls(field, s, {(index,): field.one})

    @classmethod
    def monomial(cls, field: Field, s: int, word: Sequence[int], coeff=1) -> 'FreePoly':
        return cls(field, s, {tuple(word): field(coeff)})

    def _new(self, terms: Mapping[Word, Scalar]) -> 'FreePoly':
        return FreePoly(self.field, self.alphabet_size, terms)

    # ------------------------------------------------------------------
    # Acceso
    # ------------------------------------------------------------------
    def terms(self) -> List[Tuple[Word, Scalar]]:
        """Pares (palabra, coeficiente) en orden deglex descendente."""
        return list(self._terms.items())

    def as_dict(self) -> Dict[Word, Scalar]:
        return dict(self._terms)

    def words(self) -> List[Word]:
        return list(self._terms)

    def coefficient(self, word: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(word), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self):
        """Longitud máxima de palabra; MINUS_INFINITY para el cero."""
        if not self._terms:
            return MINUS_INFINITY
        return len(next(iter(self._terms)))

    @property
    def leading_word(self) -> Word:
        if not self._terms:
            raise DomainViolationError("el polinomio cero no tiene palabra líder")
        return next(iter(self._terms))

    @property
    def leading_coefficient(self) -> Scalar:
        return self._terms[self.leading_word]

    @property
    def constant_term(self) -> Scalar:
        return self._terms.get(EMPTY_WORD, self.field.zero)

    def is_scalar(self) -> bool:
        return all(len(w) == 0 for w in self._terms)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------
    def _check_compatible(self, other: 'FreePoly'):
        if self.field != other.field:
            raise StructureMismatchError(f"cuerpos distintos: {self.field} y {other.field}")
        if self.alphabet_size != other.alphabet_size:
            raise StructureMismatchError(
                f"alfabetos distintos: {self.alphabet_size} y {other.alphabet_size}")

    def _coerce(self, other) -> 'FreePoly':
        if isinstance(other, FreePoly):
            self._check_compatible(other)
            return other
        return FreePoly.constant(self.field, self.alphabet_size, other)

    def __add__(self, other):
        other = self._coerce(other)
        result = dict(self._terms)
        zero = self.field.zero
        for word, coeff in other._terms.items():
            result[word] = result.get(word, zero) + coeff
        return self._new(result)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, value) -> 'FreePoly':
        value = self.field(value)
        if not value:
            return self._new({})
        return self._new({w: c * value for w, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FreePoly):
            return self.scale(other)
        return nc_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainViolationError("F_s no tiene inversos: exponente negativo")
        result = FreePoly.one(self.field, self.alphabet_size)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return (self.field == other.field and self.alphabet_size == other.alphabet_size
                    and self._terms == other._terms)
        if isinstance(other, int):
            return self == FreePoly.constant(self.field, self.alphabet_size, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.alphabet_size, tuple(self._terms.items())))
        return self._hash

    def monic(self) -> 'FreePoly':
        """Normaliza el coeficiente líder a 1."""
        if not self._terms:
            return self
        return self.scale(self.field.one / self.leading_coefficient)

    def homogeneous_part(self, d: int) -> 'FreePoly':
        return homogeneous_part(self, d)

    def homogeneous_components(self) -> Dict[int, 'FreePoly']:
        """Partes homogéneas no nulas indexadas por grado."""
        buckets: Dict[int, Dict[Word, Scalar]] = {}
        for word, coeff in self._terms.items():
            buckets.setdefault(len(word), {})[word] = coeff
        return {d: self._new(t) for d, t in buckets.items()}

    def change_field(self, target: Field) -> 'FreePoly':
        """Transporta los coeficientes a otro cuerpo (ℚ → F_q, F_p → F_q)."""
        if target == self.field:
            return self
        return FreePoly(target, self.alphabet_size,
                        {w: target.convert_from(c, self.field) for w, c in self._terms.items()})

    # ------------------------------------------------------------------
    # Texto
    # ------------------------------------------------------------------
    def to_text(self) -> str:
        """Forma canónica: términos en deglex descendente, 'coef*palabra'."""
        if not self._terms:
            return '0'
        pieces = []
        for word, coeff in self._terms.items():
            frac = self.field.as_fraction(coeff)
            negative = frac < 0
            magnitude = -frac if negative else frac
            if not word:
                body = str(magnitude)
            elif magnitude == 1:
                body = word_text(word)
            else:
                body = f"{magnitude}*{word_text(word)}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return ' '.join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"FreePoly({self.to_text()!r}, s={self.alphabet_size}, {self.field.descriptor})"


def nc_mul(a: FreePoly, b: FreePoly) -> FreePoly:
    """Producto no conmutativo: expansión distributiva con concatenación.

    Raises:
        StructureMismatchError: Si difieren cuerpo o alfabeto
    """
    a._check_compatible(b)
    result: Dict[Word, Scalar] = {}
    zero = a.field.zero
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            word = wa + wb
            result[word] = result.get(word, zero) + ca * cb
    return a._new(result)


def commutator(a: FreePoly, b: FreePoly) -> FreePoly:
    """Conmutador [a, b] = ab − ba."""
    return nc_mul(a, b) - nc_mul(b, a)


def homogeneous_part(f: FreePoly, d: int) -> FreePoly:
    """Suma de los términos de longitud exactamente d."""
    if d < 0:
        raise DomainViolationError("el grado debe ser no negativo")
    return f._new({w: c for w, c in f._terms.items() if len(w) == d})


def substitute(f: FreePoly, images: Sequence[FreePoly]) -> FreePoly:
    """Imagen de f por el endomorfismo z_i ↦ images[i].

    Args:
        f: Polinomio de F_s
        images: Exactamente s polinomios sobre el mismo cuerpo

    Returns:
        El polinomio sustituido (alfabeto de las imágenes)

    Raises:
        StructureMismatchError: Si la longitud o los cuerpos no coinciden
    """
    if len(images) != f.alphabet_size:
        raise StructureMismatchError(
            f"se esperaban {f.alphabet_size} imágenes, se recibieron {len(images)}")
    target_s = images[0].alphabet_size
    for image in images:
        if image.field != f.field or image.alphabet_size != target_s:
            raise StructureMismatchError("las imágenes deben compartir cuerpo y alfabeto")
    one = FreePoly.one(f.field, target_s)
    prefixes: Dict[Word, FreePoly] = {EMPTY_WORD: one}
    result = FreePoly.zero(f.field, target_s)
    for word, coeff in f.terms():
        result = result + _prefix_product(word, prefixes, images).scale(coeff)
    return result


def _prefix_product(word: Word, cache: Dict[Word, FreePoly], images: Sequence[FreePoly]) -> FreePoly:
    # memoiza productos de prefijos
    if word in cache:
        return cache[word]
    value = _prefix_product(word[:-1], cache, images) * images[word[-1]]
    cache[word] = value
    return value

