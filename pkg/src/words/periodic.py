"""Palabras infinitas periódicas u^∞ y su orden lexicográfico.

La clase de u^∞ se representa siempre por la raíz primitiva de u, de modo
que dos palabras dan la misma palabra infinita si y solo si comparten raíz.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

from ..algebra.freepoly import Word, word_text
from ..utils.errors import DomainViolationError

AlphabetOrder = Tuple[int, ...]


class Ordering(str, Enum):
    """Resultado de una comparación."""

    LT = 'LT'
    EQ = 'EQ'
    GT = 'GT'

    def flipped(self) -> 'Ordering':
        return {Ordering.LT: Ordering.GT, Ordering.GT: Ordering.LT}.get(self, self)


def natural_order(s: int) -> AlphabetOrder:
    """Orden z_0 < z_1 < … < z_{s-1}."""
    return tuple(range(s))


def _ranks(order: Optional[Sequence[int]]) -> Optional[Dict[int, int]]:
    if order is None:
        return None
    if len(set(order)) != len(order):
        raise DomainViolationError(f"orden de variables con repeticiones: {list(order)}")
    return {g: r for r, g in enumerate(order)}


def failure_function(word: Sequence[int]):
    """Función de fallo (bordes) de Knuth–Morris–Pratt."""
    border = [0] * (len(word) + 1)
    border[0] = -1
    k = -1
    for i, letter in enumerate(word):
        while k >= 0 and word[k] != letter:
            k = border[k]
        k += 1
        border[i + 1] = k
    return border


def primitive_root(w: Sequence[int]) -> Tuple[Word, int]:
    """Raíz primitiva y exponente máximo.

    Args:
        w: Palabra no vacía

    Returns:
        (raíz, exponente) con raíz^exponente = w

    Raises:
        DomainViolationError: Si la palabra es vacía
    """
    w = tuple(w)
    if not w:
        raise DomainViolationError("la palabra vacía no tiene raíz primitiva")
    n = len(w)
    period = n - failure_function(w)[n]
    if n % period == 0:
        return w[:period], n // period
    return w, 1


def is_primitive(w: Sequence[int]) -> bool:
    return primitive_root(w)[1] == 1


def inf_cmp(u: Sequence[int], v: Sequence[int], order: Optional[Sequence[int]] = None) -> Ordering:
    """Compara u^∞ con v^∞ lexicográficamente.

    Basta comparar prefijos de longitud |u| + |v|: si coinciden, por el
    teorema de los dos periodos las palabras infinitas son iguales.

    Args:
        u, v: Palabras no vacías
        order: Generadores en orden creciente (None = orden natural)

    Returns:
        LT, EQ o GT

    Raises:
        DomainViolationError: Si alguna palabra es vacía o el orden no
            incluye todas sus letras
    """
    if not u or not v:
        raise DomainViolationError("inf_cmp requiere palabras no vacías")
    ranks = _ranks(order)
    if ranks is not None:
        missing = sorted((set(u) | set(v)) - ranks.keys())
        if missing:
            raise DomainViolationError(f"el orden de variables no incluye {missing}")
    lu, lv = len(u), len(v)
    for i in range(lu + lv):
        a, b = u[i % lu], v[i % lv]
        if a != b:
            if ranks is not None:
                a, b = ranks[a], ranks[b]
            return Ordering.LT if a < b else Ordering.GT
    return Ordering.EQ


def brute_force_inf_cmp(u: Sequence[int], v: Sequence[int],
                        order: Optional[Sequence[int]] = None) -> Ordering:
    """Comparación de referencia con un prefijo de longitud 2|u||v| + |u| + |v|."""
    if not u or not v:
        raise DomainViolationError("inf_cmp requiere palabras no vacías")
    length = 2 * len(u) * len(v) + len(u) + len(v)
    ranks = _ranks(order) or {}
    pu = [ranks.get(u[i % len(u)], u[i % len(u)]) for i in range(length)]
    pv = [ranks.get(v[i % len(v)], v[i % len(v)]) for i in range(length)]
    if pu == pv:
        return Ordering.EQ
    return Ordering.LT if pu < pv else Ordering.GT


@dataclass(frozen=True)
class OmegaClass:
    """Clase de una palabra infinita periódica z = r^∞ con r primitiva."""

    primitive: Word
    order: Optional[AlphabetOrder] = None

    def __post_init__(self):
        if not self.primitive:
            raise DomainViolationError("la raíz de una palabra periódica no puede ser vacía")
        if not is_primitive(self.primitive):
            raise DomainViolationError(f"{word_text(self.primitive)} no es primitiva")

    @classmethod
    def of(cls, word: Sequence[int], order: Optional[Sequence[int]] = None) -> 'OmegaClass':
        """Clase de word^∞."""
        root, _ = primitive_root(word)
        return cls(root, tuple(order) if order is not None else None)

    def compare_word(self, word: Sequence[int]) -> Ordering:
        """Compara word^∞ con esta clase."""
        return inf_cmp(word, self.primitive, self.order)

    def compare(self, other: 'OmegaClass') -> Ordering:
        return inf_cmp(self.primitive, other.primitive, self.order)

    def to_text(self) -> str:
        return f"({word_text(self.primitive)})^inf"

    def __str__(self):
        return self.to_text()
