"""Analizador descendente recursivo de expresiones de F_s.

Gramática:

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := atom ['^' natural]
    atom   := número ['/' número] | ident | '(' poly ')'
    ident  := 'x' | 'y' | 'z' | 'z' natural | 'S' natural

x, y, z son alias de z0, z1, z2; S<m> es el polinomio estándar S_m. La
yuxtaposición equivale a '*', de modo que la forma canónica 'z0 z1' se lee
de vuelta sin cambios.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from ..algebra.field import Field
from ..algebra.freepoly import FreePoly, Word
from ..genmat.identities import standard_polynomial
from ..utils.errors import DomainViolationError, ParseError
from ..utils.settings import Defaults

logger = logging.getLogger(__name__)

ALIASES = {'x': 0, 'y': 1, 'z': 2}

_TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<ident>S\d+|z\d+|[A-Za-z])
  | (?P<op>[-+*^()])
""", re.VERBOSE)

ATOM_START = frozenset({'number', 'identifier', "'('"})


# ----------------------------------------------------------------------
# Árbol sintáctico
# ----------------------------------------------------------------------
class Expr:
    """Nodo del árbol sintáctico."""


@dataclass(frozen=True)
class ScalarLit(Expr):
    value: Fraction


@dataclass(frozen=True)
class Generator(Expr):
    index: int


@dataclass(frozen=True)
class StandardPoly(Expr):
    m: int


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Product(Expr):
    factors: Tuple[Expr, ...]


@dataclass(frozen=True)
class Sum(Expr):
    """Suma con signos: pares (+1|-1, término)."""

    terms: Tuple[Tuple[int, Expr], ...]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    """Divide el texto en tokens con posición (línea, columna desde 1).

    Raises:
        ParseError: Ante un carácter no reconocido
    """
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if match is None:
            raise ParseError(f"carácter inesperado {text[pos]!r}", line, column,
                             ATOM_START | {"'+'", "'-'", "'*'", "'^'", "')'"})
        kind = match.lastgroup
        if kind == 'newline':
            line += 1
            line_start = match.end()
        elif kind != 'space':
            tokens.append(Token('identifier' if kind == 'ident' else kind, match.group(), line, column))
        pos = match.end()
    tokens.append(Token('end', '', line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, s: Optional[int]):
        self.tokens = tokenize(text)
        self.pos = 0
        self.s = s

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _is_op(self, *ops: str) -> bool:
        return self.current.kind == 'op' and self.current.text in ops

    def _advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def _fail(self, message: str, expected):
        token = self.current
        raise ParseError(message, token.line, token.column, frozenset(expected))

    def _starts_atom(self) -> bool:
        return self.current.kind in ('number', 'identifier') or self._is_op('(')

    def parse(self) -> Expr:
        expr = self.poly()
        if self.current.kind != 'end':
            self._fail(f"token inesperado {self.current.text!r}", {"'+'", "'-'", "fin de la entrada"})
        return expr

    def poly(self) -> Expr:
        terms = []
        sign = 1
        if self._is_op('+', '-'):
            sign = -1 if self._advance().text == '-' else 1
        terms.append((sign, self.term()))
        while self._is_op('+', '-'):
            sign = -1 if self._advance().text == '-' else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while True:
            if self._is_op('*'):
                self._advance()
                factors.append(self.factor())
            elif self._starts_atom():
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Expr:
        base = self.atom()
        if not self._is_op('^'):
            return base
        self._advance()
        token = self.current
        if token.kind != 'number' or '/' in token.text:
            self._fail("el exponente debe ser un natural (F_s no tiene inversos)", {'natural number'})
        self._advance()
        exponent = int(token.text)
        if exponent > Defaults.MAX_EXPONENT:
            raise ParseError(f"exponente {exponent} mayor que {Defaults.MAX_EXPONENT}",
                             token.line, token.column, frozenset({'natural number'}))
        return Power(base, exponent)

    def atom(self) -> Expr:
        token = self.current
        if token.kind == 'number':
            self._advance()
            num, _, den = token.text.partition('/')
            if den and int(den) == 0:
                raise ParseError("denominador nulo", token.line, token.column, frozenset({'number'}))
            return ScalarLit(Fraction(int(num), int(den) if den else 1))
        if token.kind == 'identifier':
            self._advance()
            return self._identifier(token)
        if self._is_op('('):
            self._advance()
            inner = self.poly()
            if not self._is_op(')'):
                self._fail("falta ')'", {"')'"})
            self._advance()
            return inner
        self._fail(f"se esperaba un átomo, se encontró {token.text or 'fin de la entrada'!r}", ATOM_START)

    def _identifier(self, token: Token) -> Expr:
        text = token.text
        if text.startswith('S') and len(text) > 1:
            m = int(text[1:])
            if m < 1 or (self.s is not None and m > self.s):
                raise ParseError(f"S{m} requiere 1 <= m <= s", token.line, token.column,
                                 frozenset({'generator'}))
            return StandardPoly(m)
        if text.startswith('z') and len(text) > 1:
            index = int(text[1:])
        elif text in ALIASES:
            index = ALIASES[text]
        else:
            raise ParseError(f"generador desconocido {text!r}", token.line, token.column,
                             frozenset({'x', 'y', 'z', 'z<n>', 'S<m>'}))
        if self.s is not None and index >= self.s:
            raise ParseError(f"el generador {text} no pertenece al alfabeto de tamaño {self.s}",
                             token.line, token.column, frozenset({f"z0..z{self.s - 1}"}))
        return Generator(index)


def parse_expr(text: str, s: Optional[int] = None) -> Expr:
    """Analiza una expresión.

    Args:
        text: Texto de la expresión
        s: Tamaño del alfabeto (None = sin comprobar índices)

    Returns:
        Árbol sintáctico

    Raises:
        ParseError: Sintaxis inválida, generador desconocido o exponente excesivo
    """
    return _Parser(text, s).parse()


def infer_alphabet(expr: Expr) -> int:
    """Menor s que contiene todos los generadores (S<m> exige s >= m)."""
    if isinstance(expr, Generator):
        return expr.index + 1
    if isinstance(expr, StandardPoly):
        return expr.m
    if isinstance(expr, Power):
        return infer_alphabet(expr.base)
    if isinstance(expr, Product):
        return max(infer_alphabet(f) for f in expr.factors)
    if isinstance(expr, Sum):
        return max(infer_alphabet(t) for _, t in expr.terms)
    return 1


def lower(expr: Expr, field: Field, s: int) -> FreePoly:
    """Expande el árbol a un FreePoly canónico.

    Raises:
        DomainViolationError: Si un literal no es representable en el cuerpo
    """
    if isinstance(expr, ScalarLit):
        return FreePoly.constant(field, s, field.from_fraction(expr.value.numerator, expr.value.denominator))
    if isinstance(expr, Generator):
        if expr.index >= s:
            raise DomainViolationError(f"el generador z{expr.index} no cabe en un alfabeto de tamaño {s}")
        return FreePoly.generator(field, s, expr.index)
    if isinstance(expr, StandardPoly):
        return standard_polynomial(expr.m, field, s)
    if isinstance(expr, Power):
        return lower(expr.base, field, s) ** expr.exponent
    if isinstance(expr, Product):
        result = FreePoly.one(field, s)
        for factor in expr.factors:
            result = result * lower(factor, field, s)
        return result
    if isinstance(expr, Sum):
        result = FreePoly.zero(field, s)
        for sign, term in expr.terms:
            value = lower(term, field, s)
            result = result + value if sign > 0 else result - value
        return result
    raise TypeError(f"nodo desconocido: {expr!r}")


def parse_poly(text: str, field: Field, s: Optional[int] = None) -> FreePoly:
    """parse_expr seguido de lower; s se infiere si no se indica."""
    expr = parse_expr(text, s)
    return lower(expr, field, s if s is not None else infer_alphabet(expr))


_WORD_RE = re.compile(r"z(\d+)|([a-y])|\s+")


def parse_word(text: str) -> Word:
    """Palabra en ortografía de la CLI: 'aab' (a = z0) o 'z0 z0 z1'; '1' es la vacía.

    Raises:
        ParseError: Ante un carácter no reconocido
    """
    if text.strip() in ('', '1'):
        return ()
    letters = []
    pos = 0
    while pos < len(text):
        match = _WORD_RE.match(text, pos)
        if match is None:
            raise ParseError(f"letra inesperada {text[pos]!r}", 1, pos + 1,
                             frozenset({'a..y', 'z<n>'}))
        if match.group(1) is not None:
            letters.append(int(match.group(1)))
        elif match.group(2) is not None:
            letters.append(ord(match.group(2)) - ord('a'))
        pos = match.end()
    return tuple(letters)


def word_alphabet(*words: Word) -> int:
    return max((max(w) + 1 for w in words if w), default=1)
