# Cálculo de centralizadores, reconocimiento y raíces
