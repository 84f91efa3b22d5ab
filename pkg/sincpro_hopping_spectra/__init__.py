"""
SincPro Hopping Spectra - Arquitectura limpia
Espectros de operadores tridiagonales con signos de salto aleatorios
"""

__version__ = "1.0.0"
