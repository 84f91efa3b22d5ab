"""
Dominio - Jerarquía de excepciones del paquete
"""

from typing import Optional


class SpectraError(Exception):
    """Error base de sincpro_hopping_spectra"""


class InvalidWordError(SpectraError, ValueError):
    """Palabra de signos o ventana mal formada"""


class InvalidAmplitudeError(InvalidWordError):
    """La amplitud de b no es sigma² para el sigma solicitado"""


class WindowError(InvalidWordError):
    """Ventana que no contiene el índice 0 o con límites inconsistentes"""


class OutOfDomainError(SpectraError, ValueError):
    """Argumento fuera del dominio de una fórmula cerrada"""


class ParameterOutOfRangeError(SpectraError, ValueError):
    """Parámetro fuera del rango admitido por la operación"""

    def __init__(
        self,
        message: str,
        required_d: Optional[int] = None,
        ceiling: Optional[int] = None,
    ):
        super().__init__(message)
        self.required_d = required_d
        self.ceiling = ceiling


class SolverFailureError(SpectraError, RuntimeError):
    """La iteración QR (o la de raíces simultáneas) no convergió"""

    def __init__(self, message: str, index: int = -1, iterations: int = 0):
        super().__init__(message)
        self.index = index
        self.iterations = iterations


class ConfigurationError(SpectraError, ValueError):
    """Configuración de ejecución inválida"""
