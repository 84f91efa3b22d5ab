"""
Dominio - Nube de puntos espectrales y contratos de los servicios de espectros
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Protocol, Sequence

import numpy as np

from .errors import SpectraError
from .operators import DenseMatrix
from .sequences import SignWord


@dataclass
class SpectrumCloud:
    """
    Conjunto etiquetado de autovalores.

    Cada punto lleva la palabra que lo generó (word_id), el multiplicador
    de Floquet alpha y el tamaño N. Los parámetros globales (sigma, semilla,
    parámetros de generación) viajan en params y terminan en la cabecera CSV.
    """

    points: np.ndarray
    n_sizes: np.ndarray
    word_ids: List[str]
    alphas: np.ndarray
    sigma: float
    seed: Optional[int] = None
    params: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=complex).ravel()
        self.n_sizes = np.asarray(self.n_sizes, dtype=np.int64).ravel()
        self.alphas = np.asarray(self.alphas, dtype=complex).ravel()
        self.word_ids = list(self.word_ids)
        size = self.points.size
        if not (self.n_sizes.size == size == self.alphas.size == len(self.word_ids)):
            raise SpectraError("Cada punto de la nube necesita sus metadatos")
        if not np.all(np.isfinite(self.points)):
            raise SpectraError("La nube contiene puntos no finitos")

    @classmethod
    def empty(cls, sigma: float, **params) -> "SpectrumCloud":
        return cls(
            points=np.zeros(0, dtype=complex),
            n_sizes=np.zeros(0, dtype=np.int64),
            word_ids=[],
            alphas=np.zeros(0, dtype=complex),
            sigma=sigma,
            params=dict(params),
        )

    @classmethod
    def from_eigenvalues(
        cls,
        eigenvalues: Sequence[complex],
        n_size: int,
        word_id: str,
        alpha: complex,
        sigma: float,
    ) -> "SpectrumCloud":
        values = np.asarray(eigenvalues, dtype=complex).ravel()
        count = values.size
        return cls(
            points=values,
            n_sizes=np.full(count, n_size, dtype=np.int64),
            word_ids=[word_id] * count,
            alphas=np.full(count, alpha, dtype=complex),
            sigma=sigma,
        )

    @classmethod
    def concat(
        cls, clouds: Sequence["SpectrumCloud"], sigma: float, **params
    ) -> "SpectrumCloud":
        if not clouds:
            return cls.empty(sigma, **params)
        word_ids: List[str] = []
        for cloud in clouds:
            word_ids.extend(cloud.word_ids)
        return cls(
            points=np.concatenate([c.points for c in clouds]),
            n_sizes=np.concatenate([c.n_sizes for c in clouds]),
            word_ids=word_ids,
            alphas=np.concatenate([c.alphas for c in clouds]),
            sigma=sigma,
            params=dict(params),
        )

    def __len__(self) -> int:
        return int(self.points.size)

    def sorted(self) -> "SpectrumCloud":
        """Orden determinista por (re, im, N, word_id, arg alpha)"""
        if not len(self):
            return self
        keys = (
            np.angle(self.alphas),
            np.asarray(self.word_ids, dtype=str),
            self.n_sizes,
            self.points.imag,
            self.points.real,
        )
        order = np.lexsort(keys)
        return SpectrumCloud(
            points=self.points[order],
            n_sizes=self.n_sizes[order],
            word_ids=[self.word_ids[i] for i in order],
            alphas=self.alphas[order],
            sigma=self.sigma,
            seed=self.seed,
            params=dict(self.params),
        )

    def with_params(self, seed: Optional[int] = None, **params) -> "SpectrumCloud":
        merged = dict(self.params)
        merged.update(params)
        return SpectrumCloud(
            points=self.points,
            n_sizes=self.n_sizes,
            word_ids=self.word_ids,
            alphas=self.alphas,
            sigma=self.sigma,
            seed=self.seed if seed is None else seed,
            params=merged,
        )


@dataclass(frozen=True)
class InclusionReport:
    """Violaciones de las cotas de inclusión y distancia mínima al agujero"""

    total: int
    annulus_violations: int
    diamond_violations: int
    hole_points: int
    worst_excess: float
    hole_distance: float

    @property
    def ok(self) -> bool:
        return self.annulus_violations == 0 and self.diamond_violations == 0


@dataclass(frozen=True)
class CheckResult:
    """Resultado de una comprobación numérica con su error máximo"""

    check: str
    passed: bool
    max_error: float
    detail: str = ""
    runtime_ms: float = 0.0
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


class SpectraServiceProtocol(Protocol):
    """Contrato de los constructores de matrices y espectros de Bloch"""

    def build_finite(self, c: Sequence[float]) -> DenseMatrix: ...

    def build_periodic(self, c: Sequence[float], alpha: complex) -> DenseMatrix: ...

    def bloch_spectrum(self, word: SignWord, alpha_count: int) -> SpectrumCloud: ...
