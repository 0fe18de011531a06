# Paquete principal: álgebra libre, matrices genéricas y centralizadores
