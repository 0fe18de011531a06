#!/usr/bin/env python3
"""Archivo principal de ncalg.

Calcula centralizadores en el álgebra asociativa libre, prueba identidades
de matrices genéricas y sondea sus propiedades espectrales. Toda la salida
es un único documento JSON en la salida estándar.

Versión: 1.0.0
"""

import os
import sys

# Añadir el directorio del proyecto al path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

try:
    from src.cli.commands import run
except ImportError as e:
    print(f"❌ Error al importar módulos: {e}", file=sys.stderr)
    print("Asegúrate de que todas las dependencias estén instaladas.", file=sys.stderr)
    print("Ejecuta: pip install -r requirements.txt", file=sys.stderr)
    sys.exit(2)


def main(argv=None):
    """Función principal de la aplicación.

    Returns:
        Código de salida (0 correcto, 1 verificación fallida, 2 error de uso)
    """
    return run(argv)


if __name__ == "__main__":
    """Punto de entrada de la aplicación."""
    try:
        exit_code = main()
        sys.exit(exit_code)
    except KeyboardInterrupt:
        print("\n👋 Cálculo interrumpido por el usuario", file=sys.stderr)
        sys.exit(130)
    except Exception as e:
        print(f"❌ Error crítico: {e}", file=sys.stderr)
        sys.exit(1)
