"""Jerarquía de excepciones de la biblioteca.

Todas las operaciones lanzan subclases de NcAlgebraError para que la
interfaz de línea de comandos pueda traducirlas a códigos de salida.
"""

from typing import Any, FrozenSet, Optional


class NcAlgebraError(Exception):
    """Error base de la biblioteca."""


class StructureMismatchError(NcAlgebraError):
    """Operandos con cuerpo, alfabeto u orden incompatibles."""


class DomainViolationError(NcAlgebraError, ValueError):
    """Argumento fuera del dominio de la operación."""


class PreconditionError(NcAlgebraError):
    """Precondición violada.

    Args:
        message: Descripción del problema
        payload: Objeto que causó la violación (palabra, polinomio, ...)
    """

    def __init__(self, message: str, payload: Optional[Any] = None):
        super().__init__(message)
        self.payload = payload


class UsageError(NcAlgebraError):
    """Argumentos de línea de comandos inválidos."""


class ParseError(NcAlgebraError):
    """Error de sintaxis en una expresión.

    Args:
        message: Descripción del problema
        line: Línea (desde 1)
        column: Columna (desde 1)
        expected: Conjunto de tokens esperados en esa posición
    """

    def __init__(self, message: str, line: int, column: int,
                 expected: FrozenSet[str] = frozenset()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        detail = f"{message} (línea {line}, columna {column})"
        if self.expected:
            detail += f"; se esperaba: {', '.join(sorted(self.expected))}"
        super().__init__(detail)

    def to_dict(self) -> dict:
        """Convierte el error a diccionario para la salida JSON."""
        return {
            'error': 'syntax',
            'message': str(self),
            'line': self.line,
            'column': self.column,
            'expected': sorted(self.expected),
        }
