"""Caché en disco de informes de centralizador.

Cada entrada es un archivo JSON '<hash>.json' con la clave, la marca de
tiempo y el informe. La escritura es atómica: archivo temporal en el mismo
directorio y os.replace.
"""

import hashlib
import json
import logging
import os
import tempfile
import time
from pathlib import Path
from typing import Any, Dict, Optional

from ..utils.settings import Defaults

logger = logging.getLogger(__name__)


def cache_key(f_text: str, field: str, bound: int, options: Optional[Dict[str, Any]] = None) -> str:
    """sha256 de (texto canónico de f, cuerpo, D, versión, opciones)."""
    payload = json.dumps([f_text, field, bound, Defaults.VERSION, options or {}],
                         sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()


class ReportCache:
    """Almacén de informes indexado por cache_key.

    Args:
        directory: Directorio de la caché (se crea al escribir)
    """

    def __init__(self, directory: Path):
        self.directory = Path(directory)

    def path_for(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> Optional[dict]:
        """Informe guardado, o None si no existe o está dañado."""
        path = self.path_for(key)
        if not path.exists():
            return None
        try:
            with open(path, encoding='utf-8') as handle:
                entry = json.load(handle)
        except (OSError, ValueError) as e:
            logger.warning("entrada de caché ilegible %s: %s", path, e)
            return None
        if entry.get('key') != key:
            return None
        logger.debug("acierto de caché %s", key[:12])
        return entry.get('report')

    def put(self, key: str, report: dict):
        """Guarda el informe de forma atómica."""
        self.directory.mkdir(parents=True, exist_ok=True)
        entry = {'key': key, 'timestamp': time.time(), 'report': report}
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix='.tmp-', suffix='.json')
        try:
            with os.fdopen(fd, 'w', encoding='utf-8') as handle:
                json.dump(entry, handle, ensure_ascii=False, indent=2)
            os.replace(tmp, self.path_for(key))
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        logger.debug("informe guardado en caché %s", key[:12])
