"""
Dominio - Configuración de ejecución y opciones de los servicios
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import ConfigurationError

COMMANDS = ("pi-union", "sample", "finite", "curve", "verify")
RANDOMIZED_COMMANDS = ("sample", "finite")
MODES = ("closed-form", "bloch", "both")
OVERLAYS = ("annulus", "diamond", "hole", "ellipses")
SHAPES = ("periodic", "open", "pair")
BACKENDS = ("qr", "lapack")


@dataclass(frozen=True)
class SolverOptions:
    """Parámetros del solver QR"""

    tolerance: float = 1e-12
    stall_limit: int = 30
    budget_factor: int = 30
    backend: str = "qr"

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ConfigurationError(f"Backend de autovalores desconocido: {self.backend}")
        if self.tolerance <= 0 or self.stall_limit < 1 or self.budget_factor < 1:
            raise ConfigurationError("Opciones del solver fuera de rango")


@dataclass(frozen=True)
class CurveOptions:
    """Muestreo de las curvas cerradas en theta"""

    samples: int = 720
    max_step: float = 0.02
    max_refinements: int = 6

    def __post_init__(self):
        if self.samples < 8:
            raise ConfigurationError("Se necesitan al menos 8 muestras por curva")


@dataclass(frozen=True)
class SpectraOptions:
    """Opciones de enumeración y uniones de Bloch"""

    alpha_count: int = 512
    ceiling: int = 14
    workers: int = 1
    solver: SolverOptions = field(default_factory=SolverOptions)

    def __post_init__(self):
        if self.alpha_count < 1:
            raise ConfigurationError("alpha_count debe ser >= 1")
        if self.workers < 1:
            raise ConfigurationError("workers debe ser >= 1")


@dataclass(frozen=True)
class RunConfig:
    """Configuración de una invocación del CLI"""

    command: str
    sigma: float = 0.5
    nmax: int = 2
    n: int = 0
    n_min: int = 1
    alpha_count: int = 512
    seed: Optional[int] = None
    p_sigma: float = 0.5
    count: int = 1000
    out_csv: Optional[str] = None
    out_svg: Optional[str] = None
    out_json: Optional[str] = None
    tol: float = 1e-9
    mode: str = "both"
    overlay: Tuple[str, ...] = OVERLAYS
    branch: str = "+"
    shape: str = "pair"
    alpha_angle: Optional[float] = None
    solver: str = "qr"
    workers: int = 1
    max_points: int = 20000
    r_max: int = 10
    inject_fault: Optional[int] = None
    command_line: str = ""

    def validate(self) -> "RunConfig":
        """Valida todos los parámetros; lanza ConfigurationError en el primer fallo"""
        if self.command not in COMMANDS:
            raise ConfigurationError(f"Subcomando desconocido: {self.command}")
        if not (0.0 < self.sigma <= 1.0):
            raise ConfigurationError(f"sigma debe estar en (0, 1]: {self.sigma}")
        if self.alpha_count < 1:
            raise ConfigurationError("--alpha-count debe ser >= 1")
        if self.nmax < 1 or self.count < 1 or self.n_min < 1:
            raise ConfigurationError("Los tamaños y conteos deben ser positivos")
        if self.n_min > self.nmax:
            raise ConfigurationError(f"Rango de N vacío: [{self.n_min}, {self.nmax}]")
        if not (0.0 < self.p_sigma < 1.0):
            raise ConfigurationError(f"--p-sigma debe estar en (0, 1): {self.p_sigma}")
        if self.tol <= 0:
            raise ConfigurationError("--tol debe ser positivo")
        if self.mode not in MODES:
            raise ConfigurationError(f"--mode inválido: {self.mode}")
        unknown = [o for o in self.overlay if o not in OVERLAYS]
        if unknown:
            raise ConfigurationError(f"--overlay desconocido: {', '.join(unknown)}")
        if self.branch not in ("+", "-"):
            raise ConfigurationError(f"--branch debe ser '+' o '-': {self.branch}")
        if self.shape not in SHAPES:
            raise ConfigurationError(f"Forma de matriz desconocida: {self.shape}")
        if self.solver not in BACKENDS:
            raise ConfigurationError(f"--solver inválido: {self.solver}")
        if self.workers < 1 or self.max_points < 1 or self.r_max < 1:
            raise ConfigurationError("--workers, --max-points y --r-max deben ser positivos")
        if self.command in RANDOMIZED_COMMANDS and self.seed is None:
            raise ConfigurationError(f"'{self.command}' es aleatorio y necesita --seed")
        if self.command == "finite":
            if self.n < 2:
                raise ConfigurationError("finite necesita --n >= 2")
            if self.shape != "open" and self.n < 3:
                raise ConfigurationError("La matriz periódica necesita --n >= 3")
        if self.command == "curve":
            if self.n < 0:
                raise ConfigurationError("--n debe ser >= 0")
            if self.mode != "bloch" and self.sigma >= 1.0:
                raise ConfigurationError(
                    "La curva cerrada necesita sigma < 1; use --mode bloch para sigma = 1"
                )
        if self.inject_fault is not None and self.inject_fault < 1:
            raise ConfigurationError("--inject-fault necesita un índice >= 1")
        return self

    def solver_options(self) -> SolverOptions:
        return SolverOptions(backend=self.solver)

    def spectra_options(self) -> SpectraOptions:
        return SpectraOptions(
            alpha_count=self.alpha_count, workers=self.workers, solver=self.solver_options()
        )
