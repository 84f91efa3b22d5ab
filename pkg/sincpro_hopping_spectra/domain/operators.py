"""
Dominio - Tipos de matrices de transferencia, regiones y matrices densas
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Protocol, Sequence, Tuple

import numpy as np

from .errors import InvalidWordError, ParameterOutOfRangeError
from .sequences import SignWord


@dataclass(frozen=True)
class Transfer2x2:
    """Matriz compleja 2x2 [[a11, a12], [a21, a22]]"""

    a11: complex
    a12: complex
    a21: complex
    a22: complex

    @classmethod
    def step(cls, c_n: float, lam: complex) -> "Transfer2x2":
        """Factor de un paso X_n = [[0, 1], [-c_n, lam]], det(X_n) = c_n"""
        return cls(0j, 1 + 0j, complex(-c_n), complex(lam))

    @classmethod
    def identity(cls) -> "Transfer2x2":
        return cls(1 + 0j, 0j, 0j, 1 + 0j)

    def __matmul__(self, other: "Transfer2x2") -> "Transfer2x2":
        return Transfer2x2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    @property
    def trace(self) -> complex:
        return self.a11 + self.a22

    @property
    def det(self) -> complex:
        return self.a11 * self.a22 - self.a12 * self.a21

    def to_array(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=complex)


@dataclass(frozen=True)
class TraceData:
    """Par (tau, gamma) de T_p; gamma = c_1...c_p = ±sigma^p no depende de lambda"""

    tau: complex
    gamma: float
    p: int


class Region(str, Enum):
    """Clase de lambda para una palabra periódica"""

    B = "B"
    I = "I"  # noqa: E741
    O = "O"  # noqa: E741


@dataclass(frozen=True)
class Classification:
    """Clasificación B/I/O junto con |z1| >= |z2| y el valor de Phi"""

    region: Region
    z1_abs: float
    z2_abs: float
    phi: float

    @property
    def in_closure_of_interior(self) -> bool:
        return self.region in (Region.B, Region.I)


@dataclass(frozen=True)
class RegionParams:
    """sigma y las constantes de las regiones de inclusión y del agujero H_sigma"""

    sigma: float

    def __post_init__(self):
        sigma = float(self.sigma)
        if not (0.0 < sigma <= 1.0):
            raise InvalidWordError(f"Amplitud sigma fuera de (0, 1]: {sigma}")
        object.__setattr__(self, "sigma", sigma)

    @property
    def annulus_inner(self) -> float:
        return 1.0 - self.sigma

    @property
    def annulus_outer(self) -> float:
        return 1.0 + self.sigma

    @property
    def diamond_bound(self) -> float:
        return math.sqrt(2.0 * (1.0 + self.sigma**2))

    @property
    def r_sigma(self) -> float:
        return (1.0 - self.sigma**2) / math.sqrt(1.0 + self.sigma**2)

    def rho_lower(self, n: int) -> float:
        """rho_{sigma,n} = ((1 - sigma^(2^(n+1))) / (1 + sigma^(2^n)))^(1/2^n)"""
        if n < 0:
            raise ParameterOutOfRangeError("n debe ser no negativo")
        s = self.sigma ** (2**n)
        return ((1.0 - s * s) / (1.0 + s)) ** (1.0 / 2**n)


@dataclass(frozen=True)
class RegionMembership:
    """Pertenencia de lambda a las regiones E_±sigma, H_sigma, anillo y diamante"""

    in_E_plus: bool
    in_E_minus: bool
    in_H: bool
    in_annulus: bool
    in_diamond: bool


@dataclass(frozen=True)
class DecayReport:
    """Tasa empírica de decaimiento de las dos soluciones fundamentales"""

    rate: float
    decays: bool
    rates: Tuple[float, float]
    m: int
    horizon: int
    guaranteed: bool


class DenseMatrix:
    """Matriz cuadrada densa compleja (fila mayor), n >= 1 y entradas finitas"""

    __slots__ = ("_data",)

    def __init__(self, entries: Iterable):
        data = np.array(entries, dtype=np.complex128)
        if data.ndim != 2 or data.shape[0] != data.shape[1] or data.shape[0] < 1:
            raise ValueError(f"Se espera una matriz cuadrada no vacía, forma {data.shape}")
        if not np.all(np.isfinite(data)):
            raise ValueError("La matriz contiene entradas no finitas")
        data.setflags(write=False)
        self._data = data

    @property
    def n(self) -> int:
        return self._data.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._data

    def to_array(self) -> np.ndarray:
        """Copia escribible"""
        return np.array(self._data, copy=True)

    def __repr__(self) -> str:
        return f"DenseMatrix(n={self.n})"


class TransferProtocol(Protocol):
    """Contrato de la maquinaria de matrices de transferencia"""

    def transfer_matrix(self, word: SignWord, lam: complex) -> Transfer2x2: ...

    def trace_det(self, word: SignWord, lam: complex) -> TraceData: ...

    def classify(self, word: SignWord, lam: complex, tol: float = 1e-9) -> Classification: ...


class EigenSolverProtocol(Protocol):
    """Contrato de un solver de autovalores densos no simétricos"""

    def eigvals(self, matrix: DenseMatrix) -> np.ndarray: ...

    def eigvals_batch(self, matrices: Sequence[DenseMatrix]) -> list: ...


def as_points(values: Optional[Iterable[complex]]) -> np.ndarray:
    """Convierte cualquier iterable de complejos a un arreglo 1-D complejo"""
    if values is None:
        return np.zeros(0, dtype=complex)
    return np.asarray(values, dtype=complex).ravel()
