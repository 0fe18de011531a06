# Aritmética exacta: cuerpos, polinomios libres y conmutativos
