# Álgebra de matrices genéricas
