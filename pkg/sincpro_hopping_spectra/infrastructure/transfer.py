"""
Infraestructura - Matrices de transferencia, criterio Phi, regiones y curvas cerradas
"""

import cmath
import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..domain.config import CurveOptions
from ..domain.errors import OutOfDomainError, ParameterOutOfRangeError, SpectraError
from ..domain.operators import (
    Classification,
    DecayReport,
    Region,
    RegionMembership,
    RegionParams,
    TraceData,
    Transfer2x2,
    TransferProtocol,
)
from ..domain.sequences import SignWord
from .seqcore import DEFAULT_C_TILDE, CTildeTable

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
DECAY_HORIZON = 2048
MAX_DECAY_DEPTH = 60


def _check_branch(branch: str) -> int:
    if branch not in ("+", "-"):
        raise SpectraError(f"Rama inválida: {branch!r}")
    return 1 if branch == "+" else -1


def _stable_roots(tau: complex, gamma: float) -> Tuple[complex, complex]:
    """Raíces de z² - tau·z + gamma: la mayor por la fórmula con signo, la otra por gamma/z1"""
    disc = cmath.sqrt(tau * tau - 4.0 * gamma)
    if (tau.conjugate() * disc).real < 0:
        disc = -disc
    z1 = (tau + disc) / 2.0
    z2 = gamma / z1 if z1 != 0 else 0j
    return z1, z2


class TransferService(TransferProtocol):
    """Maquinaria de matrices de transferencia para palabras periódicas"""

    def transfer_matrix(self, word: SignWord, lam: complex) -> Transfer2x2:
        """T_p = X_p ··· X_1 con X_n = [[0, 1], [-c_n, lam]]"""
        result = Transfer2x2.identity()
        for c_n in word.coefficients():
            result = Transfer2x2.step(float(c_n), lam) @ result
        return result

    def trace_det(self, word: SignWord, lam: complex) -> TraceData:
        tau = self.transfer_matrix(word, lam).trace
        gamma = word.sign_product() * word.sigma**word.period
        return TraceData(tau=complex(tau), gamma=float(gamma), p=word.period)

    def classify(self, word: SignWord, lam: complex, tol: float = DEFAULT_TOL) -> Classification:
        if tol <= 0:
            raise SpectraError("La tolerancia debe ser positiva")
        data = self.trace_det(word, lam)
        z1, z2 = _stable_roots(data.tau, data.gamma)
        a1, a2 = abs(z1), abs(z2)
        if a1 < a2:
            a1, a2 = a2, a1

        if abs(data.gamma) >= 1.0:
            # |z1·z2| = 1: ninguna raíz puede estar estrictamente dentro
            region = Region.B if a1 - 1.0 <= tol else Region.O
            return Classification(region, a1, a2, math.nan)

        value = phi(data.tau, data.gamma)
        if abs(value - 1.0) <= tol:
            region = Region.B
        elif value < 1.0:
            region = Region.I
        else:
            region = Region.O
        return Classification(region, a1, a2, value)

    def paired_member(
        self, word: SignWord, tail_sign: str, lam: complex, tol: float = DEFAULT_TOL
    ) -> bool:
        """lam en la clausura de I_c y fuera del elipse abierto E_{tail·sigma}"""
        sign = _check_branch(tail_sign)
        if not self.classify(word, lam, tol).in_closure_of_interior:
            return False
        membership = region_tests(lam, RegionParams(word.sigma))
        inside_tail = membership.in_E_plus if sign > 0 else membership.in_E_minus
        return not inside_tail


def phi(tau: complex, gamma: float) -> float:
    """Phi(tau, gamma) = Re(tau)²/(1+gamma)² + Im(tau)²/(1-gamma)², solo para |gamma| < 1"""
    if not (-1.0 < gamma < 1.0):
        raise OutOfDomainError(f"Phi no está definido para |gamma| >= 1 (gamma = {gamma})")
    tau = complex(tau)
    return tau.real**2 / (1.0 + gamma) ** 2 + tau.imag**2 / (1.0 - gamma) ** 2


def rho_curve(n: int, branch: str, theta, sigma: float):
    """
    Radio rho_n^±(theta, sigma) de la curva espectral de sigma·c^(n,±).

    Acepta theta escalar o arreglo. Solo para 0 < sigma < 1.
    """
    sign = _check_branch(branch)
    if not (0.0 < sigma < 1.0):
        raise OutOfDomainError(f"Las curvas cerradas necesitan 0 < sigma < 1, sigma = {sigma}")
    if n < 0:
        raise ParameterOutOfRangeError(f"n debe ser >= 0, n = {n}")
    scale = 2**n
    s = sigma**scale
    theta = np.asarray(theta, dtype=float)
    denom = 1.0 + s * s - sign * 2.0 * s * np.cos(2.0 * scale * theta)
    rho = ((1.0 - s * s) / np.sqrt(denom)) ** (1.0 / scale)
    return float(rho) if rho.ndim == 0 else rho


def rho_polyline(
    n: int, branch: str, sigma: float, options: Optional[CurveOptions] = None
) -> np.ndarray:
    """Curva cerrada muestreada en theta con refinamiento donde los saltos son grandes"""
    options = options or CurveOptions()
    theta = np.linspace(0.0, 2.0 * math.pi, options.samples, endpoint=False)
    for _ in range(options.max_refinements):
        points = rho_curve(n, branch, theta, sigma) * np.exp(1j * theta)
        closed = np.append(points, points[0])
        gaps = np.abs(np.diff(closed))
        coarse = np.flatnonzero(gaps > options.max_step)
        if coarse.size == 0:
            break
        nxt = np.append(theta, 2.0 * math.pi)
        midpoints = 0.5 * (theta[coarse] + nxt[coarse + 1])
        theta = np.sort(np.concatenate([theta, midpoints]))
    logger.debug(f"Polilínea rho_{n}^{branch}: {theta.size} muestras")
    return rho_curve(n, branch, theta, sigma) * np.exp(1j * theta)


def curve_residual(points, n: int, branch: str, sigma: float) -> np.ndarray:
    """|rho_n^±(arg lam) - |lam||, cota superior de la distancia a la curva"""
    points = np.asarray(points, dtype=complex)
    return np.abs(rho_curve(n, branch, np.angle(points), sigma) - np.abs(points))


def region_masks(points, sigma: float) -> dict:
    """Versión vectorizada de region_tests sobre un arreglo de puntos"""
    params = RegionParams(sigma)
    z = np.asarray(points, dtype=complex)
    x, y = z.real, z.imag
    a, b = params.annulus_outer, params.annulus_inner
    if b > 0.0:
        in_plus = x**2 / a**2 + y**2 / b**2 < 1.0
        in_minus = x**2 / b**2 + y**2 / a**2 < 1.0
    else:
        in_plus = np.zeros(z.shape, dtype=bool)
        in_minus = np.zeros(z.shape, dtype=bool)
    radius = np.abs(z)
    return {
        "in_E_plus": in_plus,
        "in_E_minus": in_minus,
        "in_H": in_plus & in_minus,
        "in_annulus": (radius >= b) & (radius <= a),
        "in_diamond": np.abs(x) + np.abs(y) <= params.diamond_bound,
    }


def region_tests(lam: complex, params: RegionParams) -> RegionMembership:
    """Pertenencia abierta a E_±sigma y H_sigma, cerrada al anillo y al diamante"""
    masks = region_masks(np.array([lam], dtype=complex), params.sigma)
    return RegionMembership(**{key: bool(value[0]) for key, value in masks.items()})


def _decay_condition(sigma: float, m: int) -> bool:
    """sigma^(1/2) < 4^(-1/m)  <=>  m·log2(sigma) < -4"""
    return m * math.log2(sigma) < -4.0


def required_decay_depth(sigma: float) -> int:
    """Mínimo d >= 1 con sigma^(1/2) < 4^(-1/2^d)"""
    if not (0.0 < sigma < 1.0):
        raise ParameterOutOfRangeError(
            f"No existe profundidad de decaimiento para sigma = {sigma}", required_d=None
        )
    for d in range(1, MAX_DECAY_DEPTH + 1):
        if _decay_condition(sigma, 2**d):
            return d
    raise ParameterOutOfRangeError(
        f"sigma = {sigma} está demasiado cerca de 1", required_d=None
    )


def decay_check(
    lam: complex,
    sigma: float,
    d: int,
    horizon: int = DECAY_HORIZON,
    c_table: Optional[CTildeTable] = None,
) -> DecayReport:
    """
    Tasa empírica de las dos soluciones fundamentales de xi_{n+1} = lam·xi_n - c_n·xi_{n-1}.

    c_n = sigma·c̃_n con período m = 2^d. La tasa es
    (||(xi_r, xi_{r+1})|| / ||(xi_0, xi_1)||)^(1/r) con r = horizon.
    """
    if d < 1 or horizon < 1:
        raise ParameterOutOfRangeError("d y horizon deben ser positivos")
    m = 2**d
    if not (0.0 < sigma < 1.0) or not _decay_condition(sigma, m):
        required = required_decay_depth(sigma) if 0.0 < sigma < 1.0 else None
        raise ParameterOutOfRangeError(
            f"sigma^(1/2) >= 4^(-1/{m}); se necesita d >= {required}", required_d=required
        )
    h = 4.0 ** (-1.0 / m)
    coefficients = sigma * (c_table or DEFAULT_C_TILDE).values(m).astype(float)
    lam = complex(lam)

    rates = []
    for start in ((0j, 1 + 0j), (1 + 0j, 0j)):
        prev, cur = start
        log_norm = 0.0
        for n in range(1, horizon + 1):
            prev, cur = cur, lam * cur - coefficients[(n - 1) % m] * prev
            scale = max(abs(prev), abs(cur))
            if scale > 1e100 or (0.0 < scale < 1e-100):
                log_norm += math.log(scale)
                prev, cur = prev / scale, cur / scale
        norm = math.hypot(abs(prev), abs(cur))
        if norm == 0.0:
            rates.append(0.0)
        else:
            rates.append(math.exp((log_norm + math.log(norm)) / horizon))

    rate = max(rates)
    report = DecayReport(
        rate=rate,
        decays=rate < 1.0,
        rates=(rates[0], rates[1]),
        m=m,
        horizon=horizon,
        guaranteed=abs(lam) < h,
    )
    logger.debug(f"decay_check lam={lam}: tasas {rates}")
    return report


def star_directions(m: int, branch: str) -> np.ndarray:
    """Direcciones unitarias de los rayos de Spec(A_c^(m,±)) con sigma = 1"""
    sign = _check_branch(branch)
    j = np.arange(2 ** (m + 1))
    phase = 0.0 if sign > 0 else math.pi / 2 ** (m + 1)
    return np.exp(1j * (math.pi * j / 2**m + phase))


def star_distance(points, m: int, branch: str = "+") -> np.ndarray:
    """Distancia a la estrella {r·e^(i·pi·j/2^m): 0 <= r <= 2^(1/2^m)} (rotada para '-')"""
    if m < 0:
        raise ParameterOutOfRangeError(f"m debe ser >= 0, m = {m}")
    z = np.atleast_1d(np.asarray(points, dtype=complex))
    radius = 2.0 ** (1.0 / 2**m)
    rays = star_directions(m, branch)
    t = np.clip((z[:, None] * np.conj(rays)[None, :]).real, 0.0, radius)
    return np.min(np.abs(z[:, None] - t * rays[None, :]), axis=1)


def denseness_grid(m: int) -> np.ndarray:
    """Puntos r·e^(i·pi·j/2^m), r en {2^(1/2^m)/2, 2^(1/2^m)}, j = 0..2^(m+2)-1"""
    top = 2.0 ** (1.0 / 2**m)
    j = np.arange(2 ** (m + 2))
    directions = np.exp(1j * math.pi * j / 2**m)
    return np.concatenate([0.5 * top * directions, top * directions])


_DEFAULT = TransferService()


def transfer_matrix(word: SignWord, lam: complex) -> Transfer2x2:
    return _DEFAULT.transfer_matrix(word, lam)


def trace_det(word: SignWord, lam: complex) -> TraceData:
    return _DEFAULT.trace_det(word, lam)


def classify(word: SignWord, lam: complex, tol: float = DEFAULT_TOL) -> Classification:
    return _DEFAULT.classify(word, lam, tol)


def paired_member(word: SignWord, tail_sign: str, lam: complex, tol: float = DEFAULT_TOL) -> bool:
    return _DEFAULT.paired_member(word, tail_sign, lam, tol)
