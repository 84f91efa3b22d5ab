"""
Infraestructura - Matrices finitas y periodizadas, espectros de Bloch, enumeración,
muestreo aleatorio y comprobaciones cruzadas sobre nubes de puntos
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial import cKDTree

from ..domain.config import CurveOptions, SolverOptions, SpectraOptions
from ..domain.errors import (
    InvalidWordError,
    OutOfDomainError,
    ParameterOutOfRangeError,
    SpectraError,
)
from ..domain.operators import DenseMatrix, RegionParams
from ..domain.sequences import DiagWord, SignWord
from ..domain.spectra import CheckResult, InclusionReport, SpectraServiceProtocol, SpectrumCloud
from .eigen import QRSolver
from .seqcore import DEFAULT_C_TILDE, CTildeTable, SequenceTransforms, necklaces
from .transfer import curve_residual, region_masks, rho_polyline

logger = logging.getLogger(__name__)

ALPHA_TOL = 1e-12
UE_MAX_ABS_LAMBDA = 0.99
UE_MAX_STEPS = 10**6
HOLE_SAMPLES = 20000
N_LAW = "P(N) proporcional a 1/N"


def alpha_grid(alpha_count: int) -> np.ndarray:
    """alpha_k = exp(2·pi·i·k/K), k = 0..K-1"""
    if alpha_count < 1:
        raise ParameterOutOfRangeError("alpha_count debe ser >= 1")
    return np.exp(2j * np.pi * np.arange(alpha_count) / alpha_count)


def build_finite(c: Sequence[float]) -> DenseMatrix:
    """A^(N): superdiagonal 1, subdiagonal c_1..c_{N-1}"""
    c = np.asarray(c, dtype=float).ravel()
    if c.size == 0:
        raise InvalidWordError("build_finite necesita al menos un coeficiente")
    n = c.size + 1
    entries = np.zeros((n, n), dtype=complex)
    idx = np.arange(n - 1)
    entries[idx, idx + 1] = 1.0
    entries[idx + 1, idx] = c
    return DenseMatrix(entries)


def build_tridiagonal_periodic(sub, diag, alpha: complex, sup: float = 1.0) -> DenseMatrix:
    """
    Matriz tridiagonal periodizada: (k, k) = diag_k, (k, k+1) = sup, (k+1, k) = sub_k,
    esquinas (1, N) = alpha·sub_N y (N, 1) = sup/alpha.
    """
    diag = np.asarray(diag, dtype=complex).ravel()
    n = diag.size
    sub = np.broadcast_to(np.asarray(sub, dtype=complex), (n,))
    if n < 3:
        raise InvalidWordError(f"La matriz periodizada necesita N >= 3, N = {n}")
    alpha = complex(alpha)
    if abs(abs(alpha) - 1.0) > ALPHA_TOL:
        raise OutOfDomainError(f"|alpha| debe ser 1, |alpha| = {abs(alpha)}")
    entries = np.zeros((n, n), dtype=complex)
    idx = np.arange(n - 1)
    entries[np.arange(n), np.arange(n)] = diag
    entries[idx, idx + 1] = sup
    entries[idx + 1, idx] = sub[:-1]
    entries[0, n - 1] = alpha * sub[-1]
    entries[n - 1, 0] = sup / alpha
    return DenseMatrix(entries)


def build_periodic(c: Sequence[float], alpha: complex) -> DenseMatrix:
    """A^(N,per)_{c,alpha}: build_finite más (1, N) = alpha·c_N y (N, 1) = 1/alpha"""
    c = np.asarray(c, dtype=float).ravel()
    return build_tridiagonal_periodic(c, np.zeros(c.size), alpha)


def bloch_ready(word: SignWord) -> SignWord:
    """Palabras de período 1 o 2 se repiten hasta período 4"""
    if word.period < 3:
        return word.repeat(4 // word.period)
    return word


def _bloch_points(
    coefficients: np.ndarray, alpha_count: int, options: SolverOptions
) -> List[np.ndarray]:
    solver = QRSolver(options)
    return [solver.eigvals(build_periodic(coefficients, a)) for a in alpha_grid(alpha_count)]


def _diag_bloch_points(
    diag: np.ndarray, sub: float, alpha_count: int, options: SolverOptions
) -> List[np.ndarray]:
    solver = QRSolver(options)
    return [
        solver.eigvals(build_tridiagonal_periodic(sub, diag, a)) for a in alpha_grid(alpha_count)
    ]


def _word_cloud(word: SignWord, per_alpha: List[np.ndarray], alphas: np.ndarray) -> SpectrumCloud:
    pieces = [
        SpectrumCloud.from_eigenvalues(values, word.period, word.label, a, word.sigma)
        for values, a in zip(per_alpha, alphas)
    ]
    return SpectrumCloud.concat(pieces, word.sigma)


def _bloch_worker(args: Tuple[Tuple[int, ...], float, int, SolverOptions]) -> SpectrumCloud:
    signs, sigma, alpha_count, options = args
    return SpectraService(SpectraOptions(alpha_count=alpha_count, solver=options)).bloch_spectrum(
        SignWord(signs, sigma), alpha_count
    )


class SpectraService(SpectraServiceProtocol):
    """Uniones de Bloch, enumeración de pi_N y muestreo reproducible"""

    def __init__(self, options: Optional[SpectraOptions] = None):
        self.options = options or SpectraOptions()
        self.solver = QRSolver(self.options.solver)

    def build_finite(self, c: Sequence[float]) -> DenseMatrix:
        return build_finite(c)

    def build_periodic(self, c: Sequence[float], alpha: complex) -> DenseMatrix:
        return build_periodic(c, alpha)

    def bloch_spectrum(self, word: SignWord, alpha_count: Optional[int] = None) -> SpectrumCloud:
        """Unión de los espectros de A^(N,per)_{c,alpha} sobre la malla de alpha"""
        alpha_count = alpha_count or self.options.alpha_count
        ready = bloch_ready(word)
        per_alpha = _bloch_points(ready.coefficients(), alpha_count, self.options.solver)
        cloud = _word_cloud(word, per_alpha, alpha_grid(alpha_count))
        return cloud.with_params(alpha_count=alpha_count, bloch_period=ready.period)

    def diag_bloch_spectrum(
        self, dword: DiagWord, alpha_count: Optional[int] = None, length: Optional[int] = None
    ) -> np.ndarray:
        """Espectro de Bloch de M_b (diagonal periódica, sub -sigma², sup 1)"""
        alpha_count = alpha_count or self.options.alpha_count
        length = length or max(dword.period, 4)
        if length % dword.period:
            raise SpectraError(f"El largo {length} no es múltiplo del período {dword.period}")
        diag = np.tile(np.asarray(dword.diag), length // dword.period)
        per_alpha = _diag_bloch_points(diag, dword.sub, alpha_count, self.options.solver)
        return np.concatenate(per_alpha)

    def pi_union(
        self,
        n_max: int,
        sigma: float,
        alpha_count: Optional[int] = None,
        dedup: bool = True,
    ) -> SpectrumCloud:
        """Unión de los espectros de todas las palabras de período <= n_max"""
        ceiling = self.options.ceiling
        if n_max > ceiling:
            raise ParameterOutOfRangeError(
                f"n_max = {n_max} supera el techo de enumeración {ceiling}", ceiling=ceiling
            )
        if n_max < 1:
            raise ParameterOutOfRangeError("n_max debe ser >= 1")
        alpha_count = alpha_count or self.options.alpha_count
        started = time.perf_counter()

        words: List[SignWord] = []
        raw_counts: Dict[int, int] = {}
        dedup_counts: Dict[int, int] = {}
        for n in range(1, n_max + 1):
            if dedup:
                batch = [w.with_sigma(sigma) for w in necklaces(n)]
            else:
                batch = [SignWord(s, sigma) for s in product((-1, 1), repeat=n)]
            raw_counts[n] = 2**n
            dedup_counts[n] = len(batch)
            words.extend(batch)
            logger.debug(f"Período {n}: {2**n} palabras, {len(batch)} clases")
        logger.info(f"pi_{n_max}: {len(words)} palabras, {alpha_count} valores de alpha")

        jobs = [(w.signs, sigma, alpha_count, self.options.solver) for w in words]
        if self.options.workers > 1:
            with ProcessPoolExecutor(max_workers=self.options.workers) as pool:
                clouds = list(pool.map(_bloch_worker, jobs, chunksize=8))
        else:
            clouds = [_bloch_worker(job) for job in jobs]

        cloud = SpectrumCloud.concat(
            clouds,
            sigma,
            n_max=n_max,
            alpha_count=alpha_count,
            dedup=dedup,
            raw_counts=raw_counts,
            dedup_counts=dedup_counts,
        ).sorted()
        logger.info(
            f"pi_{n_max}: {len(cloud)} puntos en {time.perf_counter() - started:.1f} s"
        )
        return cloud

    def random_periodic_sample(
        self,
        count: int,
        n_range: Tuple[int, int],
        p_sigma: float,
        sigma: float,
        seed: int,
    ) -> SpectrumCloud:
        """
        count muestras de Spec(A^(N,per)_{c,alpha}).

        Cada muestra usa su propio hijo de SeedSequence(seed): N con peso 1/N,
        signos con P(+sigma) = p_sigma y alpha uniforme en el círculo.
        """
        n_min, n_max = n_range
        if not (1 <= n_min <= n_max):
            raise ParameterOutOfRangeError(f"Rango de N inválido: {n_range}")
        _check_probability(p_sigma)
        sizes = np.arange(n_min, n_max + 1)
        weights = 1.0 / sizes
        weights /= weights.sum()

        pieces = []
        for child in np.random.SeedSequence(seed).spawn(count):
            rng = np.random.default_rng(child)
            n = int(rng.choice(sizes, p=weights))
            signs = tuple(int(s) for s in np.where(rng.random(n) < p_sigma, 1, -1))
            alpha = complex(np.exp(2j * np.pi * rng.random()))
            word = SignWord(signs, sigma)
            matrix_word = word if n >= 3 else word.repeat(math.ceil(3 / n))
            values = self.solver.eigvals(build_periodic(matrix_word.coefficients(), alpha))
            pieces.append(SpectrumCloud.from_eigenvalues(values, n, word.label, alpha, sigma))

        logger.info(f"{count} muestras periódicas con semilla {seed}")
        return SpectrumCloud.concat(
            pieces,
            sigma,
            count=count,
            n_min=n_min,
            n_max=n_max,
            p_sigma=p_sigma,
            n_law=N_LAW,
        ).with_params(seed=seed)

    def random_finite_sample(
        self,
        n: int,
        p_sigma: float,
        sigma: float,
        seed: int,
        periodic: bool,
        alpha: complex = 1.0,
    ) -> SpectrumCloud:
        """Una realización: A^(N) abierta o A^(N,per) con el vector c de la semilla"""
        c = draw_coefficients(n, p_sigma, sigma, seed)
        return self._finite_cloud(c, sigma, seed, periodic, alpha, p_sigma)

    def random_finite_pair(
        self, n: int, p_sigma: float, sigma: float, seed: int, alpha: complex = 1.0
    ) -> Tuple[SpectrumCloud, SpectrumCloud]:
        """Nubes abierta y periodizada del mismo vector c"""
        c = draw_coefficients(n, p_sigma, sigma, seed)
        return (
            self._finite_cloud(c, sigma, seed, False, alpha, p_sigma),
            self._finite_cloud(c, sigma, seed, True, alpha, p_sigma),
        )

    def _finite_cloud(
        self,
        c: np.ndarray,
        sigma: float,
        seed: int,
        periodic: bool,
        alpha: complex,
        p_sigma: float,
    ) -> SpectrumCloud:
        n = c.size
        if periodic:
            matrix = build_periodic(c, alpha)
            tag = "periodic"
        else:
            matrix = build_finite(c[:-1])
            tag = "open"
        values = self.solver.eigvals(matrix)
        word_id = "".join("+" if v > 0 else "-" for v in c)
        cloud = SpectrumCloud.from_eigenvalues(values, n, word_id, alpha if periodic else 1.0, sigma)
        return cloud.with_params(seed=seed, shape=tag, n=n, p_sigma=p_sigma)


def _check_probability(p_sigma: float) -> None:
    if not (0.0 < p_sigma < 1.0):
        raise ParameterOutOfRangeError(f"p_sigma debe estar en (0, 1): {p_sigma}")


def draw_coefficients(n: int, p_sigma: float, sigma: float, seed: int) -> np.ndarray:
    """c_1..c_N independientes con P(c_j = +sigma) = p_sigma"""
    if n < 2:
        raise ParameterOutOfRangeError(f"N debe ser >= 2, N = {n}")
    _check_probability(p_sigma)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    return np.where(rng.random(n) < p_sigma, sigma, -sigma).astype(float)


def directed_hausdorff(a, b) -> float:
    """max_{x en a} min_{y en b} |x - y| con un k-d tree sobre b"""
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.size == 0:
        return 0.0
    if b.size == 0:
        return math.inf
    tree = cKDTree(np.column_stack([b.real, b.imag]))
    distances, _ = tree.query(np.column_stack([a.real, a.imag]))
    return float(np.max(distances))


def hausdorff(a, b) -> float:
    """Distancia de Hausdorff simétrica entre dos nubes"""
    return max(directed_hausdorff(a, b), directed_hausdorff(b, a))


def _points(cloud_or_points) -> np.ndarray:
    if isinstance(cloud_or_points, SpectrumCloud):
        return cloud_or_points.points
    return np.asarray(cloud_or_points, dtype=complex).ravel()


def hole_boundary(sigma: float, samples: int = HOLE_SAMPLES) -> np.ndarray:
    """Muestras de la frontera de H_sigma (arcos de cada elipse dentro de la otra)"""
    params = RegionParams(sigma)
    a, b = params.annulus_outer, params.annulus_inner
    t = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    plus = a * np.cos(t) + 1j * b * np.sin(t)
    minus = b * np.cos(t) + 1j * a * np.sin(t)
    keep_plus = plus.real**2 / b**2 + plus.imag**2 / a**2 <= 1.0 + 1e-12
    keep_minus = minus.real**2 / a**2 + minus.imag**2 / b**2 <= 1.0 + 1e-12
    return np.concatenate([plus[keep_plus], minus[keep_minus]])


def hole_distance(points, sigma: float) -> float:
    """Distancia mínima de los puntos a la clausura de H_sigma (0 si alguno cae dentro)"""
    z = _points(points)
    if z.size == 0 or sigma >= 1.0:
        return math.inf
    if np.any(region_masks(z, sigma)["in_H"]):
        return 0.0
    boundary = hole_boundary(sigma)
    tree = cKDTree(np.column_stack([boundary.real, boundary.imag]))
    distances, _ = tree.query(np.column_stack([z.real, z.imag]))
    return float(np.min(distances))


def inclusion_violations(
    cloud_or_points, sigma: float, shape: str = "periodic", slack: float = 1e-9
) -> InclusionReport:
    """
    Cotas de inclusión de una nube.

    periodic: anillo [1-sigma, 1+sigma] y |x|+|y| <= sqrt(2(1+sigma²)).
    open: |x|+|y| <= 2·sqrt(sigma) (sin anillo).
    """
    z = _points(cloud_or_points)
    params = RegionParams(sigma)
    radius = np.abs(z)
    taxi = np.abs(z.real) + np.abs(z.imag)
    if shape == "open":
        diamond_excess = taxi - 2.0 * math.sqrt(sigma)
        annulus_excess = np.zeros_like(radius)
    elif shape == "periodic":
        diamond_excess = taxi - params.diamond_bound
        annulus_excess = np.maximum(params.annulus_inner - radius, radius - params.annulus_outer)
    else:
        raise SpectraError(f"Forma desconocida: {shape}")
    annulus_bad = int(np.count_nonzero(annulus_excess > slack))
    diamond_bad = int(np.count_nonzero(diamond_excess > slack))
    worst = float(max(np.max(annulus_excess, initial=-math.inf), np.max(diamond_excess, initial=-math.inf)))
    hole_points = int(np.count_nonzero(region_masks(z, sigma)["in_H"])) if z.size else 0
    report = InclusionReport(
        total=int(z.size),
        annulus_violations=annulus_bad,
        diamond_violations=diamond_bad,
        hole_points=hole_points,
        worst_excess=worst,
        hole_distance=hole_distance(z, sigma) if shape == "periodic" else math.nan,
    )
    if not report.ok:
        logger.warning(
            f"Cotas violadas: anillo {annulus_bad}, diamante {diamond_bad} de {z.size} puntos"
        )
    return report


def quartic_residual(points, sigma: float) -> np.ndarray:
    """(u²-v²)²/(1-sigma²)² + (2uv)²/(1+sigma²)² - 1 para lam = u + iv"""
    z = _points(points)
    u, v = z.real, z.imag
    return (u * u - v * v) ** 2 / (1 - sigma**2) ** 2 + (2 * u * v) ** 2 / (1 + sigma**2) ** 2 - 1.0


def ellipse_residual(points, sigma: float) -> np.ndarray:
    """Residuo radial a la más cercana de las dos elipses de pi_1"""
    z = _points(points)
    return np.minimum(curve_residual(z, 0, "+", sigma), curve_residual(z, 0, "-", sigma))


def _ue_max(lams: np.ndarray, i_max: int, table: CTildeTable) -> np.ndarray:
    signs = table.values(i_max).astype(float)
    prev = np.zeros(lams.shape, dtype=complex)
    cur = np.ones(lams.shape, dtype=complex)
    best = np.ones(lams.shape)
    for n in range(1, i_max):
        prev, cur = cur, lams * cur - signs[n - 1] * prev
        np.maximum(best, np.abs(cur), out=best)
    return best


@dataclass(frozen=True)
class UeBoundReport:
    """max |u_i| frente a (1 - |lam|)^-1"""

    lam: complex
    max_abs: float
    bound: float
    i_max: int

    @property
    def passed(self) -> bool:
        return self.max_abs <= self.bound + 1e-9


def ue_bound_check(
    lam, i_max: int, c_table: Optional[CTildeTable] = None
) -> List[UeBoundReport]:
    """Itera u_{n+1} = lam·u_n - c̃_n·u_{n-1} desde (0, 1) para uno o varios lam"""
    lams = np.atleast_1d(np.asarray(lam, dtype=complex))
    if np.any(np.abs(lams) > UE_MAX_ABS_LAMBDA):
        raise ParameterOutOfRangeError(f"ue_bound_check necesita |lam| <= {UE_MAX_ABS_LAMBDA}")
    if not (1 <= i_max <= UE_MAX_STEPS):
        raise ParameterOutOfRangeError(f"i_max debe estar en [1, {UE_MAX_STEPS}]")
    best = _ue_max(lams, i_max, c_table or DEFAULT_C_TILDE)
    return [
        UeBoundReport(complex(l), float(m), 1.0 / (1.0 - abs(l)), i_max)
        for l, m in zip(lams, best)
    ]


@dataclass(frozen=True)
class SymmetryReport:
    """Distancia dirigida de la nube transformada a la nube original, por mapa"""

    distances: Dict[str, float]
    tol: float

    def passed(self, *maps: str) -> bool:
        return all(self.distances[m] <= self.tol for m in maps)


SYMMETRY_MAPS = {
    "conj": np.conj,
    "neg": np.negative,
    "rot": lambda z: 1j * z,
}


def symmetry_check(cloud_or_points, tol: float = 1e-8) -> SymmetryReport:
    """lam -> conj(lam), -lam, i·lam: distancia de cada imagen a la nube"""
    z = _points(cloud_or_points)
    distances = {name: directed_hausdorff(f(z), z) for name, f in SYMMETRY_MAPS.items()}
    return SymmetryReport(distances=distances, tol=tol)


@dataclass(frozen=True)
class SquareSpectrumReport:
    """Hausdorff entre {lam²}, Spec(A_b) y Spec(M_b) sobre la misma malla de alpha"""

    word: str
    squared_vs_b: float
    mb_vs_b: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.squared_vs_b <= self.tol and self.mb_vs_b <= self.tol


def square_spectrum_check(
    b: SignWord,
    sigma: float,
    alpha_count: int,
    tol: float = 1e-6,
    options: Optional[SolverOptions] = None,
) -> SquareSpectrumReport:
    """
    Compara H1 = {lam²: lam en Spec(A_c)}, c = Gamma_{sigma,+}(b), con H2 = Spec(A_b)
    y con el espectro de M_b. c tiene largo L = 4N (8 si N = 1); b y M_b largo L/2.
    """
    options = options or SolverOptions()
    transforms = SequenceTransforms()
    c = transforms.gamma_raw_word(b, sigma)
    if c.period < 6:
        c = c.repeat(2)
    half = c.period // 2
    b_long = b.repeat(half // b.period)
    mb = transforms.m_word(b, sigma)

    squared = np.concatenate(_bloch_points(c.coefficients(), alpha_count, options)) ** 2
    h2 = np.concatenate(_bloch_points(b_long.coefficients(), alpha_count, options))
    mb_diag = np.tile(np.asarray(mb.diag), half // mb.period)
    hm = np.concatenate(_diag_bloch_points(mb_diag, mb.sub, alpha_count, options))

    report = SquareSpectrumReport(
        word=b.label,
        squared_vs_b=hausdorff(squared, h2),
        mb_vs_b=hausdorff(hm, h2),
        tol=tol,
    )
    logger.debug(
        f"Cuadrado de {b.label}: H1-H2 {report.squared_vs_b:.2e}, M_b-H2 {report.mb_vs_b:.2e}"
    )
    return report


@dataclass(frozen=True)
class ClosedFormReport:
    """Nube de Bloch frente a la curva cerrada rho_n^±"""

    n: int
    branch: str
    sigma: float
    cloud_to_curve: float
    curve_to_cloud: float
    tol: float
    coverage_tol: float

    @property
    def passed(self) -> bool:
        return self.cloud_to_curve <= self.tol and self.curve_to_cloud <= self.coverage_tol


def coverage_tolerance(sigma: float, alpha_count: int) -> float:
    """Resolución de la malla de alpha para la distancia curva -> nube"""
    return 4.0 * math.pi * (1.0 + sigma) / alpha_count


def closed_form_check(
    n: int,
    branch: str,
    sigma: float,
    alpha_count: int,
    tol: float = 1e-6,
    options: Optional[SpectraOptions] = None,
    curve_options: Optional[CurveOptions] = None,
) -> ClosedFormReport:
    """Residuo exacto nube -> curva y cobertura curva -> nube para sigma·c^(n,±)"""
    word = SequenceTransforms().c_iterate_word(n, branch, sigma)
    cloud = SpectraService(options).bloch_spectrum(word, alpha_count)
    polyline = rho_polyline(n, branch, sigma, curve_options)
    return ClosedFormReport(
        n=n,
        branch=branch,
        sigma=sigma,
        cloud_to_curve=float(np.max(curve_residual(cloud.points, n, branch, sigma))),
        curve_to_cloud=directed_hausdorff(polyline, cloud.points),
        tol=tol,
        coverage_tol=coverage_tolerance(sigma, alpha_count),
    )


def square_bound_check(
    n: int, alpha_count: int = 64, options: Optional[SpectraOptions] = None
) -> CheckResult:
    """Spec(A_{c^(n,±)}) en el disco |lam| <= 2^(1/2^n) con sigma = 1"""
    started = time.perf_counter()
    service = SpectraService(options)
    transforms = SequenceTransforms()
    radius = 2.0 ** (1.0 / 2**n)
    worst = -math.inf
    for branch in ("+", "-"):
        cloud = service.bloch_spectrum(transforms.c_iterate_word(n, branch, 1.0), alpha_count)
        worst = max(worst, float(np.max(np.abs(cloud.points))) - radius)
    return CheckResult(
        check=f"square_bound.n{n}",
        passed=worst <= 1e-9,
        max_error=max(worst, 0.0),
        runtime_ms=(time.perf_counter() - started) * 1000.0,
    )


_DEFAULT = SpectraService()


def bloch_spectrum(word: SignWord, alpha_count: int) -> SpectrumCloud:
    return _DEFAULT.bloch_spectrum(word, alpha_count)


def pi_union(n_max: int, sigma: float, alpha_count: int) -> SpectrumCloud:
    return _DEFAULT.pi_union(n_max, sigma, alpha_count)


def random_periodic_sample(
    count: int, n_range: Tuple[int, int], p_sigma: float, sigma: float, seed: int
) -> SpectrumCloud:
    return _DEFAULT.random_periodic_sample(count, n_range, p_sigma, sigma, seed)


def random_finite_sample(
    n: int, p_sigma: float, sigma: float, seed: int, periodic: bool, alpha: complex = 1.0
) -> SpectrumCloud:
    return _DEFAULT.random_finite_sample(n, p_sigma, sigma, seed, periodic, alpha)
