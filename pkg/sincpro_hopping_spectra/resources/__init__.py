"""
Módulo de recursos para SincPro Hopping Spectra.

Contiene las tablas de referencia que se incluyen en el build del paquete.
"""

from pathlib import Path

# Directorio raíz de recursos
RESOURCES_DIR = Path(__file__).parent.absolute()

# Tablas exactas de c̃_n, u_n, v_n y de trazas
GOLDEN_DIR = RESOURCES_DIR / "golden"

__all__ = [
    "RESOURCES_DIR",
    "GOLDEN_DIR",
]
