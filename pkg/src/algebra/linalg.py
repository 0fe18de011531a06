"""Eliminación gaussiana dispersa e incremental sobre un cuerpo exacto.

Los vectores son diccionarios clave -> escalar. Cada fila guardada tiene como
pivote su clave máxima (según `key`) normalizada a 1, y lleva la combinación
de vectores de entrada que la produjo. Así, insertar columnas una a una da a
la vez el rango y una base del núcleo.
"""

from typing import Any, Callable, Dict, Hashable, Optional, Tuple

from .field import Field, Scalar

Vector = Dict[Hashable, Scalar]


def _axpy(target: Vector, source: Vector, factor: Scalar):
    # target -= factor * source, eliminando ceros
    for k, v in source.items():
        value = target.get(k)
        new = -factor * v if value is None else value - factor * v
        if new:
            target[k] = new
        elif value is not None:
            del target[k]


class EchelonBasis:
    """Base escalonada con seguimiento de combinaciones.

    Args:
        field: Cuerpo de los coeficientes
        key: Función de ordenación de las claves (elige el pivote máximo)
    """

    def __init__(self, field: Field, key: Optional[Callable[[Any], Any]] = None):
        self.field = field
        self.key = key
        self._rows: Dict[Hashable, Tuple[Vector, Vector]] = {}

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _pivot(self, vector: Vector):
        return max(vector, key=self.key) if self.key else max(vector)

    def _reduce(self, vector: Vector, combo: Vector) -> Tuple[Vector, Vector]:
        while vector:
            pivot = self._pivot(vector)
            row = self._rows.get(pivot)
            if row is None:
                break
            factor = vector[pivot]
            _axpy(vector, row[0], factor)
            _axpy(combo, row[1], factor)
        return vector, combo

    def insert(self, vector: Vector, tag: Hashable) -> Optional[Vector]:
        """Añade la imagen de la incógnita `tag`.

        Returns:
            None si el vector es independiente; si no, la combinación de
            etiquetas (con coeficiente 1 en `tag`) cuya imagen es cero
        """
        vec, combo = self._reduce(dict(vector), {tag: self.field.one})
        if not vec:
            return combo
        pivot = self._pivot(vec)
        inv = self.field.one / vec[pivot]
        self._rows[pivot] = ({k: v * inv for k, v in vec.items()},
                             {k: v * inv for k, v in combo.items()})
        return None

    def express(self, vector: Vector) -> Optional[Vector]:
        """Escribe `vector` como combinación de las imágenes insertadas.

        Returns:
            Diccionario etiqueta -> coeficiente, o None si no está en el
            subespacio generado
        """
        residual, combo = self._reduce(dict(vector), {})
        if residual:
            return None
        return {k: -v for k, v in combo.items() if v}
