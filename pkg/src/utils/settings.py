"""Configuración por defecto de la aplicación.

Primos por defecto, semillas, tamaños de muestra y ubicación de la caché.
"""

import logging
import os
import sys
from pathlib import Path
from typing import Optional


class Defaults:
    """Valores por defecto compartidos por la biblioteca y la CLI."""

    VERSION = "1.0.0"

    # Cuerpos
    DEFAULT_PRIME = 2**31 - 1       # Mersenne, cabe en int64 tras reducir
    SPECTRAL_PRIME = 65537
    DEFAULT_FIELD = f"p:{DEFAULT_PRIME}"

    # Aleatoriedad
    DEFAULT_SEED = 0
    PI_TEST_SAMPLES = 50
    SPECTRAL_TRIALS = 200
    CLOSURE_TRIALS = 100
    EXHAUSTIVE_LIMIT = 1 << 20      # tuplas como máximo en la búsqueda exhaustiva
    EXHAUSTIVE_CHUNK = 8192
    ROOT_SEARCH_LIMIT = 1 << 12     # elecciones del núcleo en nc_root cuando p divide a k

    # Parser
    MAX_EXPONENT = 4096

    # Caché
    CACHE_ENV = "NCALG_CACHE"
    CACHE_FALLBACK = Path.home() / ".cache" / "ncalg"

    @classmethod
    def cache_directory(cls, override: Optional[str] = None) -> Path:
        """Retorna el directorio de caché efectivo.

        Args:
            override: Ruta indicada por bandera (tiene prioridad)

        Returns:
            Ruta del directorio de caché
        """
        if override:
            return Path(override)
        env = os.environ.get(cls.CACHE_ENV)
        if env:
            return Path(env)
        return cls.CACHE_FALLBACK

    @classmethod
    def summary(cls):
        """Retorna un diccionario con la configuración relevante."""
        return {
            'version': cls.VERSION,
            'default_field': cls.DEFAULT_FIELD,
            'spectral_prime': cls.SPECTRAL_PRIME,
            'seed': cls.DEFAULT_SEED,
        }


def configure_logging(verbose: bool = False):
    """Instala un único manejador en stderr.

    La salida estándar queda reservada para el documento JSON.
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
