# Combinatoria de palabras periódicas y proyección de Bergman
