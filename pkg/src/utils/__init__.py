# Utilidades: errores y configuración
